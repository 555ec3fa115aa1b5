#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cchw/weyl.hpp"

namespace cchw {

// Simple groups of hermitian type, with the realization conventions this
// library fixes: SU(p,q) as A_{p+q-1} with noncompact simple root alpha_p,
// SO_e(2,2n-1) as B_n (noncompact alpha_1), Sp(2n,R) as C_n (alpha_n),
// SO_e(2,2n-2) as D_n (alpha_1), SO*(2n) as D_n (alpha_n), E6(-14) (alpha_1),
// E7(-25) (alpha_7).
//
// HermitianDatum is immutable after build_hermitian and safe to share across
// threads; every operation below is a pure function of its arguments.
enum class GroupKind { SU, SO_ODD, SP, SO_EVEN, SO_STAR, E6, E7 };

std::string to_string(GroupKind k);

struct HermitianDatum {
  RootSystem rs;
  GroupKind kind;
  int rank;
  int noncompact;                  // 1-based simple index
  std::vector<int> compact_simples;
  std::vector<int> p_plus;         // positive-root indices, coeff of alpha_nc = 1
  std::vector<int> compact_pos;    // the rest of Delta^+
  std::vector<Vec> cascade;        // strongly orthogonal descent in Delta(p_+)
  int real_rank;

  // per-root data over p_plus: orbit rank of a single root vector (1 long,
  // 2 short) and pairwise strong-orthogonality masks
  std::vector<int> root_rank;
  std::vector<uint64_t> so_mask;

  // the parameter set W-script = {w : -w rho is Delta_c^+ dominant}, in the
  // canonical order (reference order for E6/E7, (k, sign) for B, else by
  // length then word)
  std::vector<WeylElement> script_w;

  int script_w_index(const WeylElement& w) const;  // -1 if absent
};

// split is the p of SU(p,q) and is ignored for the other kinds.
HermitianDatum build_hermitian(GroupKind kind, int rank, int split = 0);

bool strongly_orthogonal(const RootSystem& rs, const Vec& a, const Vec& b);

// Delta(n cap n^w) = {alpha > 0 : w^{-1} alpha > 0}, as positive-root indices.
std::vector<int> n_cap_nw(const HermitianDatum& hd, const WeylElement& w);

bool in_script_w(const HermitianDatum& hd, const WeylElement& w);

// Orbit index j with mu(closure of the conormal to the w-cell) = closure of
// O_j. Dispatch: closed form for B, reference value (checked against the
// heuristic) for E6/E7, strongly-orthogonal heuristic for A/C/D.
int mu_rank(const HermitianDatum& hd, const WeylElement& w);

// max over pairwise strongly orthogonal subsets of Delta(n cap n^w) of the
// summed root ranks; exact branch and bound
int mu_rank_heuristic(const HermitianDatum& hd, const WeylElement& w);

// Orbit index of AV(L_w). Reference data for E6/E7; 2 (0 for the trivial
// parameter) for B; equal to mu_rank for the simply laced classical kinds;
// unsupported for C (type C is parametrized by clans).
int av_rank(const HermitianDatum& hd, const WeylElement& w);

std::vector<WeylElement> enumerate_script_w(const HermitianDatum& hd);

// Versioned JSON cache of enumerated parameter words (used for E7), rooted at
// the directory named by the CCHW_CACHE_DIR environment variable.
std::optional<std::vector<std::vector<int>>> load_script_w_cache(GroupKind kind, int rank);
void save_script_w_cache(GroupKind kind, int rank,
                         const std::vector<WeylElement>& elems);

}  // namespace cchw
