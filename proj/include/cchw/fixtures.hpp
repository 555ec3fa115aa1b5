#pragma once

#include <string>
#include <utility>
#include <vector>

namespace cchw::fixtures {

// Curated reference dataset, version 1, for the exceptional hermitian cases.
// Each row describes one highest weight parameter w_i: a word of simple
// reflections to be applied after the long element of the compact Weyl
// subgroup, the tau-invariant, the support dimension l(w_i), the associated
// variety orbit index, and the set of parameters that survive the
// support/tau/moment-map filters ("possible" terms).
inline constexpr const char* kReferenceVersion = "1";

struct ExceptionalRow {
  int index;                  // 1-based row id
  std::vector<int> word;      // suffix word after w_0(W_c)
  std::vector<int> tau;       // sorted simple indices
  int dim;                    // l(w) = dim of the support
  int av;                     // orbit index of AV(L_w)
  std::vector<int> possible;  // sorted row ids
};

struct TabColumn {
  int alpha, beta;                           // T_{alpha,beta}
  std::vector<std::pair<int, int>> entries;  // (w, T(w)) by row id, w ascending
};

const std::vector<ExceptionalRow>& e6_rows();
const std::vector<ExceptionalRow>& e7_rows();
const std::vector<TabColumn>& e6_tab_columns();
const std::vector<TabColumn>& e7_tab_columns();

// Known errata in the reference dataset, as "table:row:column" keys with a
// short note. These are cells the generating rules provably contradict; the
// regeneration diff reports them but they are expected.
const std::vector<std::pair<std::string, std::string>>& known_errata();

}  // namespace cchw::fixtures
