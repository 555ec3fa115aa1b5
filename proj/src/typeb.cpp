#include "cchw/typeb.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace cchw {

namespace {

void require_so_odd(const HermitianDatum& hd) {
  if (hd.kind != GroupKind::SO_ODD)
    throw std::invalid_argument("expected an SO_e(2,2n-1) datum");
}

Vec eps(int n, int i) {  // 1-based coordinate vector
  Vec v(n, Rat(0));
  v[i - 1] = 1;
  return v;
}

}  // namespace

WeylElement build_wk(const HermitianDatum& hd, int k, Sign sign) {
  require_so_odd(hd);
  int n = hd.rank;
  if (k < 1 || k > n) throw std::out_of_range("build_wk: k out of range");
  int m = n - k + 1;
  auto act = [&](const Vec& v) {
    Vec u(n);
    // cycle (1 2 ... m): e_i -> e_{i+1}, e_m -> e_1
    for (int i = 1; i <= n; ++i) {
      int target = (i < m) ? i + 1 : (i == m ? 1 : i);
      u[target - 1] = v[i - 1];
    }
    if (sign == Sign::MINUS) u[0] = -u[0];
    for (auto& c : u) c = -c;  // w_0 = -Id
    return u;
  };
  return WeylElement::from_action(hd.rs, act);
}

TypeBParam identify_param(const HermitianDatum& hd, const WeylElement& w) {
  require_so_odd(hd);
  int idx = hd.script_w_index(w);
  if (idx < 0) throw std::invalid_argument("identify_param: w not in the parameter set");
  return TypeBParam{hd.rank, idx / 2 + 1, idx % 2 == 0 ? Sign::PLUS : Sign::MINUS};
}

namespace {

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

std::string fmt_set(const std::vector<int>& v) {
  std::ostringstream os;
  os << "{";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << "}";
  return os.str();
}

void expect(CheckReport& rep, bool cond, const std::string& what) {
  ++rep.checks;
  if (!cond) rep.mismatches.push_back(what);
}

}  // namespace

CheckReport verify_lemma_b1(int n) {
  CheckReport rep;
  auto hd = build_hermitian(GroupKind::SO_ODD, n);
  std::vector<int> all_simples;
  for (int i = 1; i <= n; ++i) all_simples.push_back(i);
  auto complement = [&](int skip) {
    std::vector<int> v;
    for (int i = 1; i <= n; ++i)
      if (i != skip) v.push_back(i);
    return v;
  };

  for (int k = 1; k <= n; ++k) {
    auto wp = build_wk(hd, k, Sign::PLUS);
    auto wm = build_wk(hd, k, Sign::MINUS);
    std::string tag = "k=" + std::to_string(k);

    // (a) lengths
    expect(rep, wp.length() == (n - 1) * (n - 1) + n + k - 1, "length of w_" + tag + "^+");
    expect(rep, wm.length() == (n - 1) * (n - 1) + n - k, "length of w_" + tag + "^-");

    // (b) tau invariants
    if (k < n) {
      auto want = complement(n - k);
      expect(rep, wp.tau() == want, "tau(w_" + tag + "^+) != " + fmt_set(want));
      auto wm1 = build_wk(hd, k + 1, Sign::MINUS);
      expect(rep, wm1.tau() == want, "tau(w_" + std::to_string(k + 1) + "^-) != " + fmt_set(want));
    } else {
      expect(rep, wp.tau() == all_simples, "tau(w_n^+) != Pi");
    }
    if (k == 1) expect(rep, wm.tau() == complement(n), "tau(w_1^-) != Pi - {alpha_n}");

    // (c) root sets
    auto roots_of = [&](const WeylElement& w) {
      std::vector<Vec> out;
      for (int r : n_cap_nw(hd, w)) out.push_back(hd.rs.positive_roots()[r]);
      std::sort(out.begin(), out.end());
      return out;
    };
    std::vector<Vec> want;
    if (k < n) {
      for (int j = 2; j <= n - k + 1; ++j) want.push_back(sub(eps(n, 1), eps(n, j)));
    }
    std::sort(want.begin(), want.end());
    expect(rep, roots_of(wp) == want, "root set of w_" + tag + "^+");

    want.clear();
    want.push_back(eps(n, 1));
    for (int j = 2; j <= n; ++j) want.push_back(sub(eps(n, 1), eps(n, j)));
    for (int j = n - k + 2; j <= n; ++j) want.push_back(add(eps(n, 1), eps(n, j)));
    std::sort(want.begin(), want.end());
    expect(rep, roots_of(wm) == want, "root set of w_" + tag + "^-");

    // (d) moment-map images, closed form and heuristic
    int mu_p = k == n ? 0 : 1;
    expect(rep, mu_rank(hd, wp) == mu_p, "mu(w_" + tag + "^+)");
    expect(rep, mu_rank_heuristic(hd, wp) == mu_p, "mu heuristic (w_" + tag + "^+)");
    expect(rep, mu_rank(hd, wm) == 2, "mu(w_" + tag + "^-)");
    expect(rep, mu_rank_heuristic(hd, wm) == 2, "mu heuristic (w_" + tag + "^-)");
  }

  // the parameters enumerate the whole set, in (k, sign) order
  expect(rep, static_cast<int>(hd.script_w.size()) == 2 * n, "#parameters != 2n");
  for (int k = 1; k <= n; ++k) {
    expect(rep, hd.script_w[2 * (k - 1)] == build_wk(hd, k, Sign::PLUS), "order of w_k^+");
    expect(rep, hd.script_w[2 * (k - 1) + 1] == build_wk(hd, k, Sign::MINUS), "order of w_k^-");
  }
  return rep;
}

CheckReport verify_t_lemma(int n) {
  CheckReport rep;
  if (n < 3) throw std::invalid_argument("verify_t_lemma needs n >= 3");
  auto hd = build_hermitian(GroupKind::SO_ODD, n);
  for (int k = 1; k <= n - 2; ++k) {
    TabOperator t{n - k, n - k - 1};
    auto wp = build_wk(hd, k, Sign::PLUS);
    auto wm = build_wk(hd, k + 1, Sign::MINUS);
    std::string tag = "k=" + std::to_string(k);
    expect(rep, tab_domain(wp, t), "domain of T at w_" + tag + "^+");
    expect(rep, tab_domain(wm, t), "domain of T at w_" + std::to_string(k + 1) + "^-");
    expect(rep, tab_apply(wp, t) == build_wk(hd, k + 1, Sign::PLUS),
           "T(w_" + tag + "^+) != w_" + std::to_string(k + 1) + "^+");
    expect(rep, tab_apply(wm, t) == build_wk(hd, k + 2, Sign::MINUS),
           "T(w_" + std::to_string(k + 1) + "^-) != w_" + std::to_string(k + 2) + "^-");
  }
  return rep;
}

ExtendedPermutation embed_so(const HermitianDatum& hd, const WeylElement& w) {
  require_so_odd(hd);
  int n = hd.rank;
  // weights of the standard representation in order e_1..e_n, 0, -e_n..-e_1
  auto pos_of = [&](const Vec& mu) -> int {
    if (is_zero(mu)) return n + 1;
    for (int i = 1; i <= n; ++i) {
      if (mu == eps(n, i)) return i;
      if (mu == negate(eps(n, i))) return 2 * n + 2 - i;
    }
    throw std::runtime_error("embed_so: image is not a weight");
  };
  ExtendedPermutation ep;
  ep.n = n;
  ep.perm.assign(2 * n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    ep.perm[i - 1] = pos_of(w.apply(eps(n, i)));
    ep.perm[2 * n + 2 - i - 1] = pos_of(negate(w.apply(eps(n, i))));
  }
  ep.perm[n] = n + 1;
  return ep;
}

int n_pq(const ExtendedPermutation& w, int p, int q) {
  int c = 0;
  for (int i = 1; i <= p; ++i)
    if (w.perm[i - 1] <= q) ++c;
  return c;
}

Rat slice_quadratic(int n, const Vec& x) {
  if (static_cast<int>(x.size()) != n + 1)
    throw std::invalid_argument("slice point needs n+1 coordinates");
  auto padded = [&](int j) -> Rat { return j >= 1 && j <= n + 1 ? x[j - 1] : Rat(0); };
  Rat q = 0;
  for (int j = 1; j <= 2 * n - 1; ++j) q += padded(j) * padded(2 * n - j);
  return q;
}

bool slice_closed_condition(int n, const Vec& x) {
  for (int j = 1; j <= n - 2; ++j)
    if (x[j - 1] != 0) return false;
  return slice_quadratic(n, x) == 0;
}

namespace {

// columns of the slice matrix U(x) * P(w_2^-), 1-based entries
std::vector<Vec> slice_matrix(const HermitianDatum& hd, const Vec& x) {
  int n = hd.rank;
  int d = 2 * n + 1;
  auto padded = [&](int j) -> Rat { return j >= 1 && j <= n + 1 ? x[j - 1] : Rat(0); };

  std::vector<Vec> ucols(d, Vec(d, Rat(0)));  // ucols[j][i]: row i+1, col j+1
  for (int i = 0; i < d; ++i) ucols[i][i] = 1;
  for (int j = 1; j <= 2 * n - 1; ++j) ucols[0][j] = padded(j);        // rows 2..2n of col 1
  for (int i = 1; i <= 2 * n - 1; ++i) ucols[i][d - 1] -= padded(2 * n - i);  // last row
  ucols[0][d - 1] = -slice_quadratic(n, x) / 2;

  auto w2m = embed_so(hd, build_wk(hd, 2, Sign::MINUS));
  std::vector<Vec> mcols(d);
  for (int i = 1; i <= d; ++i) mcols[i - 1] = ucols[w2m.perm[i - 1] - 1];
  return mcols;
}

// rank of the submatrix of the given columns with the first `drop` rows
// removed, after each successive column
std::vector<int> rank_profile(const std::vector<Vec>& cols, int drop) {
  int d = static_cast<int>(cols[0].size());
  std::vector<Vec> basis;       // reduced columns
  std::vector<int> pivots;      // pivot row of each basis vector
  std::vector<int> profile;
  for (const Vec& c0 : cols) {
    Vec c(c0.begin() + drop, c0.end());
    for (size_t b = 0; b < basis.size(); ++b) {
      if (c[pivots[b]] == 0) continue;
      Rat f = c[pivots[b]] / basis[b][pivots[b]];
      for (int i = 0; i < d - drop; ++i) c[i] -= f * basis[b][i];
    }
    int piv = -1;
    for (int i = 0; i < d - drop; ++i)
      if (c[i] != 0) {
        piv = i;
        break;
      }
    if (piv >= 0) {
      basis.push_back(std::move(c));
      pivots.push_back(piv);
    }
    profile.push_back(static_cast<int>(basis.size()));
  }
  return profile;
}

}  // namespace

bool slice_membership(int n, const Vec& x) {
  if (n < 3) throw std::invalid_argument("slice_membership needs n >= 3");
  auto hd = build_hermitian(GroupKind::SO_ODD, n);
  auto cols = slice_matrix(hd, x);
  auto w1p = embed_so(hd, build_wk(hd, 1, Sign::PLUS));
  int d = 2 * n + 1;
  for (int q = 1; q <= n; ++q) {
    auto profile = rank_profile(cols, q);
    for (int p = 1; p <= d; ++p) {
      // dim(F_p cap <e_1..e_q>) = p - rank of rows > q
      if (p - profile[p - 1] < n_pq(w1p, p, q)) return false;
    }
  }
  return true;
}

bool slice_membership_single(int n, const Vec& x) {
  if (n < 3) throw std::invalid_argument("slice_membership needs n >= 3");
  auto hd = build_hermitian(GroupKind::SO_ODD, n);
  auto cols = slice_matrix(hd, x);
  auto w1p = embed_so(hd, build_wk(hd, 1, Sign::PLUS));
  int p = n + 2, q = 1;
  auto profile = rank_profile(cols, q);
  return p - profile[p - 1] >= n_pq(w1p, p, q);
}

SliceReport verify_slice(int n, int samples, uint64_t seed) {
  SliceReport rep;
  rep.n = n;
  if (n < 3) throw std::invalid_argument("verify_slice needs n >= 3");
  auto hd = build_hermitian(GroupKind::SO_ODD, n);
  auto cols_for = [&](const Vec& x) { return slice_matrix(hd, x); };
  auto w1p = embed_so(hd, build_wk(hd, 1, Sign::PLUS));
  int d = 2 * n + 1;

  auto membership_full = [&](const Vec& x) {
    auto cols = cols_for(x);
    for (int q = 1; q <= n; ++q) {
      auto profile = rank_profile(cols, q);
      for (int p = 1; p <= d; ++p)
        if (p - profile[p - 1] < n_pq(w1p, p, q)) return false;
    }
    return true;
  };
  auto membership_single = [&](const Vec& x) {
    auto cols = cols_for(x);
    auto profile = rank_profile(cols, 1);
    return (n + 2) - profile[n + 1] >= n_pq(w1p, n + 2, 1);
  };

  std::mt19937_64 rng(seed);
  auto rnd = [&](bool nonzero) {
    std::uniform_int_distribution<int> num(-6, 6), den(1, 4);
    Rat r;
    do {
      r = Rat(num(rng), den(rng));
    } while (nonzero && r == 0);
    return r;
  };

  for (int s = 0; s < samples; ++s) {
    Vec x(n + 1, Rat(0));
    switch (s % 4) {
      case 0:  // generic
        for (auto& c : x) c = rnd(false);
        break;
      case 1:  // vanishing head, generic tail
        for (int j = n - 1; j <= n + 1; ++j) x[j - 1] = rnd(false);
        break;
      case 2: {  // on the quadric, head zero (expected member)
        x[n - 2] = rnd(true);
        x[n - 1] = rnd(false);
        x[n] = -(x[n - 1] * x[n - 1]) / (2 * x[n - 2]);
        break;
      }
      case 3: {  // on the quadric but head nonzero (expected non-member)
        x[n - 2] = rnd(true);
        x[n - 1] = rnd(false);
        x[n] = -(x[n - 1] * x[n - 1]) / (2 * x[n - 2]);
        x[0] = rnd(true);
        break;
      }
    }
    ++rep.samples;
    if (slice_quadratic(n, x) == 0) ++rep.on_quadric;
    bool full = membership_full(x);
    if (full) ++rep.members;
    if (full != slice_closed_condition(n, x)) ++rep.mismatches_closed;
    if (full != membership_single(x)) ++rep.mismatches_single;
  }
  return rep;
}

std::vector<std::pair<TypeBParam, int>> cc_so(int n, int k, Sign sign) {
  if (n < 2) throw std::invalid_argument("cc_so needs n >= 2");
  if (k < 1 || k > n) throw std::invalid_argument("cc_so: k out of range");
  std::vector<std::pair<TypeBParam, int>> terms;
  terms.push_back({TypeBParam{n, k, sign}, 1});
  if (sign == Sign::PLUS && k < n) terms.push_back({TypeBParam{n, k + 1, Sign::MINUS}, 1});
  return terms;
}

}  // namespace cchw
