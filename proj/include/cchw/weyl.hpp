#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "cchw/rootsys.hpp"

namespace cchw {

// A Weyl group element, stored as the permutation it induces on the 2N roots.
// This determines the exact orthogonal action on the ambient space (W fixes
// the orthogonal complement of the root span pointwise), so equality of
// permutations is equality of actions. Action on arbitrary rational vectors
// is recovered through a canonical reduced word.
class WeylElement {
public:
  static WeylElement identity(const RootSystem& rs);
  // product of simple reflections in the given order (1-based letters)
  static WeylElement from_word(const RootSystem& rs, const std::vector<int>& word);
  // from an explicit action on ambient vectors (must permute the roots)
  static WeylElement from_action(const RootSystem& rs,
                                 const std::function<Vec(const Vec&)>& act);

  const RootSystem& root_system() const { return *rs_; }
  int length() const { return len_; }
  bool is_identity() const { return len_ == 0; }

  int image_index(int root_idx) const { return perm_[root_idx]; }
  // w(alpha_i) < 0, 1-based simple index
  bool sends_simple_negative(int i) const;
  std::vector<int> tau() const;
  // smallest i with w(alpha_i) < 0; 0 when w = e
  int first_descent() const;

  WeylElement times_simple(int i) const;   // w s_i
  WeylElement simple_times(int i) const;   // s_i w
  WeylElement operator*(const WeylElement& o) const;
  WeylElement inverse() const;

  bool operator==(const WeylElement& o) const { return perm_ == o.perm_; }
  bool operator!=(const WeylElement& o) const { return !(*this == o); }
  bool operator<(const WeylElement& o) const { return perm_ < o.perm_; }

  // canonical reduced word: repeatedly strip the smallest right descent
  std::vector<int> reduced_word() const;
  Vec apply(const Vec& v) const;
  size_t hash() const;

private:
  WeylElement(const RootSystem* rs, std::vector<uint16_t> perm, int len)
      : rs_(rs), perm_(std::move(perm)), len_(len) {}
  static int count_inversions(const RootSystem& rs, const std::vector<uint16_t>& p);

  const RootSystem* rs_;
  std::vector<uint16_t> perm_;
  int len_;
};

struct WeylElementHash {
  size_t operator()(const WeylElement& w) const { return w.hash(); }
};

// Bruhat order via the lifting property; linear in length(w).
bool bruhat_leq(const WeylElement& y, const WeylElement& w);

// longest element of the parabolic subgroup generated by the given
// 1-based simple indices
WeylElement long_element(const RootSystem& rs, const std::vector<int>& subset);

}  // namespace cchw
