#include "cchw/ccengine.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

#include "cchw/fixtures.hpp"

namespace cchw {

bool tab_valid(const RootSystem& rs, const TabOperator& t) {
  const Vec& a = rs.simple_roots().at(t.alpha - 1);
  const Vec& b = rs.simple_roots().at(t.beta - 1);
  if (RootSystem::pairing(a, a) != RootSystem::pairing(b, b))
    throw std::invalid_argument("unsupported: T_{alpha,beta} with unequal root lengths");
  return RootSystem::pairing(a, b) != 0;
}

bool tab_domain(const WeylElement& w, const TabOperator& t) {
  return !w.sends_simple_negative(t.alpha) && w.sends_simple_negative(t.beta);
}

WeylElement tab_apply(const WeylElement& w, const TabOperator& t) {
  tab_valid(w.root_system(), t);
  if (!tab_domain(w, t)) throw std::invalid_argument("tab_apply outside the domain");
  WeylElement wsa = w.times_simple(t.alpha);
  WeylElement wsb = w.times_simple(t.beta);
  bool case_a = !wsa.sends_simple_negative(t.beta);
  bool case_b = wsb.sends_simple_negative(t.alpha);
  if (case_a == case_b)
    throw std::runtime_error("tab_apply: the two defining cases did not separate");
  return case_a ? wsa : wsb;
}

namespace {

// adjacent equal-length pairs in the reference column order
std::vector<TabOperator> reference_operators(const HermitianDatum& hd) {
  const std::vector<fixtures::TabColumn>* cols = nullptr;
  if (hd.kind == GroupKind::E6) cols = &fixtures::e6_tab_columns();
  if (hd.kind == GroupKind::E7) cols = &fixtures::e7_tab_columns();
  if (!cols) throw std::invalid_argument("tab_table supports the exceptional kinds only");
  std::vector<TabOperator> ops;
  for (const auto& c : *cols) ops.push_back({c.alpha, c.beta});
  return ops;
}

// every valid operator in both orientations, for the elimination fixpoint
std::vector<TabOperator> all_operators(const RootSystem& rs) {
  std::vector<TabOperator> ops;
  for (int i = 1; i <= rs.rank(); ++i) {
    for (int j = 1; j <= rs.rank(); ++j) {
      if (i == j) continue;
      const Vec& a = rs.simple_roots()[i - 1];
      const Vec& b = rs.simple_roots()[j - 1];
      if (RootSystem::pairing(a, a) != RootSystem::pairing(b, b)) continue;
      if (RootSystem::pairing(a, b) == 0) continue;
      ops.push_back({i, j});
    }
  }
  return ops;
}

}  // namespace

std::vector<TabTableColumn> tab_table(const HermitianDatum& hd) {
  std::vector<TabTableColumn> out;
  for (const TabOperator& op : reference_operators(hd)) {
    TabTableColumn col{op, {}};
    for (size_t i = 0; i < hd.script_w.size(); ++i) {
      const WeylElement& w = hd.script_w[i];
      if (!tab_domain(w, op)) continue;
      WeylElement img = tab_apply(w, op);
      int j = hd.script_w_index(img);
      if (j < 0) throw std::runtime_error("T image left the parameter set");
      col.entries.push_back({static_cast<int>(i) + 1, j + 1});
    }
    out.push_back(std::move(col));
  }
  return out;
}

std::vector<int> possible_cc(const HermitianDatum& hd, const WeylElement& w) {
  int wi = hd.script_w_index(w);
  if (wi < 0) throw std::invalid_argument("possible_cc: w not in the parameter set");
  int avw = av_rank(hd, w);
  auto tw = w.tau();
  std::vector<int> out;
  for (size_t yi = 0; yi < hd.script_w.size(); ++yi) {
    const WeylElement& y = hd.script_w[yi];
    if (y.length() > w.length()) continue;
    auto ty = y.tau();
    if (!std::includes(ty.begin(), ty.end(), tw.begin(), tw.end())) continue;
    if (mu_rank(hd, y) > avw) continue;
    if (!bruhat_leq(y, w)) continue;
    out.push_back(static_cast<int>(yi));
  }
  return out;
}

CandidateTable build_candidate_table(const HermitianDatum& hd) {
  CandidateTable ct;
  ct.hd = &hd;
  for (const auto& w : hd.script_w) ct.possible.push_back(possible_cc(hd, w));
  return ct;
}

bool MultiplicityState::all_off_diagonal_zero() const {
  for (int y = 0; y < n; ++y)
    for (int w = 0; w < n; ++w)
      if (y != w && at(y, w) != Mult::ZERO) return false;
  return true;
}

MultiplicityState eliminate(const CandidateTable& ct, uint64_t shuffle_seed) {
  const HermitianDatum& hd = *ct.hd;
  int n = static_cast<int>(hd.script_w.size());
  MultiplicityState st;
  st.n = n;
  st.grid.assign(static_cast<size_t>(n) * n, Mult::ZERO);
  for (int w = 0; w < n; ++w) {
    for (int y : ct.possible[w]) st.grid[static_cast<size_t>(y) * n + w] = Mult::UNKNOWN;
    st.grid[static_cast<size_t>(w) * n + w] = Mult::ONE;
  }

  // relations (y, w) ~ (T y, T w) over all valid operators
  struct Rel {
    int y, w, ty, tw;
  };
  std::vector<Rel> rels;
  for (const TabOperator& op : all_operators(hd.rs)) {
    std::vector<std::pair<int, int>> dom;  // (index, image index)
    for (int i = 0; i < n; ++i) {
      if (!tab_domain(hd.script_w[i], op)) continue;
      WeylElement img = tab_apply(hd.script_w[i], op);
      int j = hd.script_w_index(img);
      if (j < 0) throw std::runtime_error("T image left the parameter set");
      dom.push_back({i, j});
    }
    for (auto [y, ty] : dom)
      for (auto [w, tw] : dom) rels.push_back({y, w, ty, tw});
  }
  std::mt19937_64 rng(shuffle_seed);
  std::shuffle(rels.begin(), rels.end(), rng);

  auto merge = [&](int a, int b) -> bool {
    Mult& ma = st.grid[a];
    Mult& mb = st.grid[b];
    if (ma == mb) return false;
    if (ma == Mult::UNKNOWN) {
      ma = mb;
      return true;
    }
    if (mb == Mult::UNKNOWN) {
      mb = ma;
      return true;
    }
    throw std::runtime_error("eliminate: ZERO/ONE conflict during propagation");
  };

  bool changed = true;
  while (changed) {
    changed = false;
    for (const Rel& r : rels)
      if (merge(r.y * n + r.w, r.ty * n + r.tw)) changed = true;
  }
  return st;
}

namespace {

CcResult singleton(const HermitianDatum& hd, const WeylElement& w, std::string provenance) {
  int idx = hd.script_w_index(w);
  if (idx < 0) throw std::invalid_argument("w not in the parameter set");
  return CcResult{{{idx, 1}}, {}, std::move(provenance)};
}

}  // namespace

CcResult characteristic_cycle(const HermitianDatum& hd, const WeylElement& w) {
  int wi = hd.script_w_index(w);
  if (wi < 0) throw std::invalid_argument("characteristic_cycle: w not in the parameter set");
  switch (hd.kind) {
    case GroupKind::SU:
    case GroupKind::SO_EVEN:
    case GroupKind::SO_STAR:
      return singleton(hd, w, "theorem-lookup");
    case GroupKind::E6:
    case GroupKind::E7: {
      auto st = eliminate(build_candidate_table(hd));
      CcResult res;
      res.provenance = "elimination";
      for (int y = 0; y < st.n; ++y) {
        Mult m = st.at(y, wi);
        if (m == Mult::ONE)
          res.terms.push_back({y, 1});
        else if (m == Mult::UNKNOWN)
          res.residual.push_back(y);
      }
      return res;
    }
    case GroupKind::SO_ODD: {
      bool minus = wi % 2 == 1;
      int k = wi / 2 + 1;
      CcResult res;
      res.provenance = "closed-form";
      if (!minus && k < hd.rank) {
        // two terms: w_k^+ and w_{k+1}^-
        res.terms.push_back({wi, 1});
        res.terms.push_back({2 * k + 1, 1});
      } else {
        res.terms.push_back({wi, 1});
      }
      return res;
    }
    case GroupKind::SP:
      throw std::invalid_argument(
          "characteristic_cycle: type C is parametrized by clans; use the clans module");
  }
  throw std::logic_error("unreachable");
}

CcResult leading_term_cycle(const HermitianDatum& hd, const WeylElement& w) {
  CcResult cc = characteristic_cycle(hd, w);
  if (!cc.residual.empty())
    throw std::runtime_error("leading_term_cycle: unresolved candidates remain");
  int best = -1;
  std::vector<int> ranks;
  for (const CcTerm& t : cc.terms) {
    int r = mu_rank(hd, hd.script_w[t.index]);
    ranks.push_back(r);
    best = std::max(best, r);
  }
  CcResult out;
  out.provenance = cc.provenance;
  for (size_t i = 0; i < cc.terms.size(); ++i)
    if (ranks[i] == best) out.terms.push_back(cc.terms[i]);
  return out;
}

}  // namespace cchw
