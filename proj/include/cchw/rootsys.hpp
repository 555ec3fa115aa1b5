#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cchw/numeric.hpp"

namespace cchw {

enum class LieType { A, B, C, D, E6, E7 };

std::string to_string(LieType t);

// A finite crystallographic root system in exact rational coordinates.
//
// Realizations: A_n in R^{n+1} (e_i - e_{i+1}); B_n in R^n with simple roots
// e_1-e_2, ..., e_{n-1}-e_n, e_n; C_n in R^n (last simple root 2e_n); D_n in
// R^n; E6/E7 inside the standard 8-dimensional realization of E8, Bourbaki
// numbering.
//
// Roots are indexed 0..2N-1: index r < N is positive_roots()[r], index N+r
// is its negative. Immutable after construction; all operations are pure.
class RootSystem {
public:
  RootSystem() = default;  // empty; use build()
  static RootSystem build(LieType type, int rank);

  LieType type() const { return type_; }
  int rank() const { return rank_; }
  int ambient_dim() const { return dim_; }
  int num_positive() const { return static_cast<int>(positive_.size()); }

  const std::vector<Vec>& simple_roots() const { return simple_; }
  const std::vector<Vec>& positive_roots() const { return positive_; }
  const Vec& rho() const { return rho_; }

  static Rat pairing(const Vec& a, const Vec& b);
  static Vec reflect(const Vec& v, const Vec& a);

  Vec root_vector(int idx) const;
  // -1 when v is not a root.
  int root_index(const Vec& v) const;
  bool is_root(const Vec& v) const { return root_index(v) >= 0; }
  int negate_index(int idx) const;

  // position of simple root i (1-based) in the positive list
  int simple_position(int i) const { return simple_pos_.at(i - 1); }
  // permutation of all 2N root indices induced by s_i (1-based i)
  const std::vector<uint16_t>& simple_perm(int i) const { return sperm_.at(i - 1); }

  // coefficients of positive root idx over the simple roots (nonnegative ints)
  const std::vector<int>& coeffs(int pos_idx) const { return coeffs_.at(pos_idx); }
  int height(int pos_idx) const;

  // 2<e_j, a>/<a,a> for simple root i, precomputed per ambient coordinate
  Vec fundamental_weight(int i) const;

  // Cartan integer <a_j, a_i^v>
  Rat cartan(int j, int i) const;

private:
  void finish_build();

  LieType type_;
  int rank_ = 0;
  int dim_ = 0;
  std::vector<Vec> simple_;
  std::vector<Vec> positive_;
  Vec rho_;
  std::vector<std::vector<int>> coeffs_;
  std::vector<int> simple_pos_;
  std::vector<std::vector<uint16_t>> sperm_;
  std::map<Vec, int> index_;
};

}  // namespace cchw
