#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cchw/hermitian.hpp"

namespace cchw {

// Candidate filtering and the wall-crossing elimination. Everything here is
// pure; eliminate works on a private grid and returns an immutable state.

// Wall-crossing operator T_{alpha,beta} between two adjacent simple roots of
// equal length; defined on {w : alpha not in tau(w), beta in tau(w)}.
struct TabOperator {
  int alpha;
  int beta;
};

bool tab_valid(const RootSystem& rs, const TabOperator& t);  // throws if unequal lengths
bool tab_domain(const WeylElement& w, const TabOperator& t);
WeylElement tab_apply(const WeylElement& w, const TabOperator& t);

struct TabTableColumn {
  TabOperator op;
  std::vector<std::pair<int, int>> entries;  // (w row id, image row id), w ascending
};

// One column per adjacent equal-length simple pair in the reference order;
// entries restricted to the parameter set. E6/E7 only.
std::vector<TabTableColumn> tab_table(const HermitianDatum& hd);

struct CandidateTable {
  const HermitianDatum* hd;
  std::vector<std::vector<int>> possible;  // per row id, sorted 0-based indices
};

// {y : y <= w, tau(w) subset tau(y), mu_rank(y) <= av_rank(w)}
std::vector<int> possible_cc(const HermitianDatum& hd, const WeylElement& w);
CandidateTable build_candidate_table(const HermitianDatum& hd);

enum class Mult : uint8_t { ZERO, ONE, UNKNOWN };

struct MultiplicityState {
  int n = 0;
  std::vector<Mult> grid;  // (y, w) -> grid[y * n + w]
  Mult at(int y, int w) const { return grid[static_cast<size_t>(y) * n + w]; }
  bool all_off_diagonal_zero() const;
};

// Fixpoint of the propagation rule m_{y,w} = m_{T(y),T(w)} over all valid
// operators, seeded with the diagonal ONEs and the impossible-pair ZEROs.
// The relation processing order is shuffled by the seed; the fixpoint is
// order independent (a ZERO/ONE conflict raises).
MultiplicityState eliminate(const CandidateTable& ct, uint64_t shuffle_seed = 0);

struct CcTerm {
  int index;  // 0-based position in script_w
  int multiplicity;
};

struct CcResult {
  std::vector<CcTerm> terms;
  std::vector<int> residual;  // entries still UNKNOWN after elimination
  std::string provenance;
};

// Dispatch: theorem lookup for the simply laced classical kinds, elimination
// for E6/E7, the closed form for B. Type C is parametrized by clans; use the
// clans module for it.
CcResult characteristic_cycle(const HermitianDatum& hd, const WeylElement& w);
CcResult leading_term_cycle(const HermitianDatum& hd, const WeylElement& w);

}  // namespace cchw
