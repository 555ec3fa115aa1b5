#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cchw/ccengine.hpp"

namespace cchw {

// Everything specific to SO_e(2,2n-1): the explicit parameters w_k^{+-}, the
// closed-form lemma checks, the embedded permutations in S_{2n+1}, and the
// Schubert-variety slice computation.

enum class Sign { PLUS, MINUS };

struct TypeBParam {
  int n;
  int k;  // 1..n
  Sign sign;
};

// w_k^+ = w_0 (1 2 ... n-k+1), w_k^- = w_0 sigma_{e_1} (1 2 ... n-k+1)
WeylElement build_wk(const HermitianDatum& hd, int k, Sign sign);
TypeBParam identify_param(const HermitianDatum& hd, const WeylElement& w);

struct CheckReport {
  int checks = 0;
  std::vector<std::string> mismatches;
  bool ok() const { return mismatches.empty(); }
};

// Recomputes lengths, tau-invariants, the root sets Delta(n cap n^w) and the
// moment-map images from the engines and compares with the closed forms.
CheckReport verify_lemma_b1(int n);
// T_{alpha_{n-k}, alpha_{n-k-1}} carries w_k^+ to w_{k+1}^+ and w_{k+1}^- to
// w_{k+2}^-, for k = 1..n-2.
CheckReport verify_t_lemma(int n);

// image of W(B_n) in S_{2n+1} under the standard (2n+1)-dimensional
// realization; one-line notation, perm[i-1] = w(i), satisfying
// perm(2n+2-i) = 2n+2-perm(i)
struct ExtendedPermutation {
  std::vector<int> perm;
  int n = 0;
};

ExtendedPermutation embed_so(const HermitianDatum& hd, const WeylElement& w);
// N_{p,q}(w) = #{i <= p : w(i) <= q}
int n_pq(const ExtendedPermutation& w, int p, int q);

// The slice through the w_2^- cell: x parametrizes the unipotent factor,
// x has n+1 coordinates. Membership of the slice point in the Schubert
// variety Z_{w_1^+} by exact rank conditions.
bool slice_membership(int n, const Vec& x);
// only the (p,q) = (n+2,1) condition
bool slice_membership_single(int n, const Vec& x);
// sum_j x_j x_{2n-j} = 2 x_{n-1} x_{n+1} + x_n^2 on the slice
Rat slice_quadratic(int n, const Vec& x);
// x_1 = ... = x_{n-2} = 0 and the quadratic vanishes
bool slice_closed_condition(int n, const Vec& x);

struct SliceReport {
  int n = 0;
  int samples = 0;
  int on_quadric = 0;
  int members = 0;
  int mismatches_closed = 0;  // full condition set vs closed condition
  int mismatches_single = 0;  // full condition set vs the single condition
  bool ok() const { return mismatches_closed == 0 && mismatches_single == 0; }
};

SliceReport verify_slice(int n, int samples, uint64_t seed);

// Theorem-level characteristic cycle for parameter (n,k,sign): multiplicity-1
// terms as parameters.
std::vector<std::pair<TypeBParam, int>> cc_so(int n, int k, Sign sign);

}  // namespace cchw
