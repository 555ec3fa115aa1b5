#pragma once

#include <set>
#include <string>
#include <vector>

#include "cchw/numeric.hpp"

namespace cchw {

// The Sp(2n,R) parameter strings: length-n sequences over {+, .}, where any
// digit or letter stands for the interchangeable natural-number entries.
// All operations in this header are pure functions.
struct Clan {
  std::vector<bool> plus;  // true = '+'

  int size() const { return static_cast<int>(plus.size()); }
  bool operator==(const Clan& o) const { return plus == o.plus; }
  bool operator<(const Clan& o) const { return plus < o.plus; }
};

// '+' is PLUS; any alphanumeric character is a dot entry; spaces are skipped.
Clan parse_clan(const std::string& s);
// canonical form: dots written as 1, 2, 3, ... (then letters), as in "1+23+4++5"
std::string format_clan(const Clan& c);

// right-to-left rank recursion: h_j looks at entry c_{n-j+1}
std::vector<int> h_vector(const Clan& c);
int geometric_cell(const Clan& c);  // h_n

// {j in 1..n-1 : h_{j+1} = h_j = j, j odd}; computed by both equivalent
// formulations and cross-checked
std::set<int> j_set(const Clan& c);

// the terms of CC(L_c), by the prefix recursion and by the closed form
// (entries freed at string positions n - j, j in J(c))
std::set<Clan> d_set_recursive(const Clan& c);
std::set<Clan> d_set_closed(const Clan& c);

bool is_cc_irreducible(const Clan& c);

// leading-term terms: the d in D(c) of maximal geometric cell
std::set<Clan> ltc_terms(const Clan& c);

// counts over all 2^n clans, by enumeration
BigInt count_irreducible(int n);
BigInt count_irreducible_by_cell(int n, int j);

// lattice-path counts: unrestricted = #C_g^n(j); restricted (no odd label
// below the top row) = N(n,j)
BigInt path_count_oracle(int n, int j, bool restricted);
BigInt path_count_total(int n, bool restricted);

// N(2l)/2^{2l} divided by 2/sqrt(pi l)
Float50 asymptotic_ratio(int l);

}  // namespace cchw
