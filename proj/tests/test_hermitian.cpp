#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "cchw/clans.hpp"
#include "cchw/fixtures.hpp"
#include "cchw/hermitian.hpp"
#include "cchw/typeb.hpp"

using namespace cchw;

TEST_CASE("real ranks and p_+ sizes") {
  struct Row {
    GroupKind kind;
    int rank, split, real_rank, p_plus;
  };
  for (auto r : std::vector<Row>{{GroupKind::SO_ODD, 5, 0, 2, 9},
                                 {GroupKind::SP, 6, 0, 6, 21},
                                 {GroupKind::SO_EVEN, 5, 0, 2, 8},
                                 {GroupKind::SO_STAR, 6, 0, 3, 15},
                                 {GroupKind::SU, 5, 2, 2, 8},
                                 {GroupKind::E6, 6, 0, 2, 16},
                                 {GroupKind::E7, 7, 0, 3, 27}}) {
    auto hd = build_hermitian(r.kind, r.rank, r.split);
    CHECK(hd.real_rank == r.real_rank);
    CHECK(static_cast<int>(hd.p_plus.size()) == r.p_plus);
    CHECK(static_cast<int>(hd.cascade.size()) == r.real_rank);
    for (size_t a = 0; a < hd.cascade.size(); ++a) {
      CHECK(hd.rs.root_index(hd.cascade[a]) >= 0);
      for (size_t b = a + 1; b < hd.cascade.size(); ++b)
        CHECK(strongly_orthogonal(hd.rs, hd.cascade[a], hd.cascade[b]));
    }
  }
}

TEST_CASE("invalid hermitian requests are rejected") {
  CHECK_THROWS(build_hermitian(GroupKind::E6, 7));
  CHECK_THROWS(build_hermitian(GroupKind::SU, 4, 0));
  CHECK_THROWS(build_hermitian(GroupKind::SO_ODD, 1));
}

TEST_CASE("n cap n^w") {
  auto hd = build_hermitian(GroupKind::SO_ODD, 5);
  auto all = n_cap_nw(hd, WeylElement::identity(hd.rs));
  CHECK(static_cast<int>(all.size()) == hd.rs.num_positive());
  for (const auto& w : hd.script_w) {
    auto s = n_cap_nw(hd, w);
    CHECK(static_cast<int>(s.size()) == hd.rs.num_positive() - w.length());
    for (int r : s) CHECK(hd.rs.coeffs(r)[hd.noncompact - 1] == 1);
  }
}

TEST_CASE("mu_rank closed forms for B_n") {
  for (int n = 2; n <= 6; ++n) {
    auto hd = build_hermitian(GroupKind::SO_ODD, n);
    for (int k = 1; k <= n; ++k) {
      CHECK(mu_rank(hd, build_wk(hd, k, Sign::PLUS)) == (k == n ? 0 : 1));
      CHECK(mu_rank(hd, build_wk(hd, k, Sign::MINUS)) == 2);
    }
  }
}

TEST_CASE("mu_rank rejects elements outside the parameter set") {
  auto hd = build_hermitian(GroupKind::SO_ODD, 4);
  CHECK_THROWS(mu_rank(hd, WeylElement::identity(hd.rs)));
}

TEST_CASE("E6 mu ranks equal the reference AV column") {
  auto hd = build_hermitian(GroupKind::E6, 6);
  const auto& rows = fixtures::e6_rows();
  for (size_t i = 0; i < rows.size(); ++i) {
    CHECK(mu_rank(hd, hd.script_w[i]) == rows[i].av);
    CHECK(mu_rank_heuristic(hd, hd.script_w[i]) == rows[i].av);
  }
  // the minimal parameter fills p_+, the longest empties it
  CHECK(mu_rank(hd, hd.script_w[0]) == 2);
  CHECK(mu_rank(hd, hd.script_w[20]) == 1);  // row 21
  CHECK(mu_rank(hd, hd.script_w[26]) == 0);  // row 27 = w_0
}

TEST_CASE("E7 mu ranks equal the reference AV column") {
  auto hd = build_hermitian(GroupKind::E7, 7);
  const auto& rows = fixtures::e7_rows();
  for (size_t i = 0; i < rows.size(); ++i)
    CHECK(mu_rank(hd, hd.script_w[i]) == rows[i].av);
}

TEST_CASE("type C mu ranks match the clan geometric cells as multisets") {
  for (int n = 2; n <= 8; ++n) {
    auto hd = build_hermitian(GroupKind::SP, n);
    std::map<int, int> from_w, from_clans;
    for (const auto& w : hd.script_w) ++from_w[mu_rank(hd, w)];
    for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
      Clan c;
      c.plus.resize(n);
      for (int i = 0; i < n; ++i) c.plus[i] = (mask >> i) & 1;
      ++from_clans[geometric_cell(c)];
    }
    CHECK(from_w == from_clans);
  }
}

TEST_CASE("AV ranks") {
  auto hd = build_hermitian(GroupKind::SO_ODD, 5);
  for (size_t i = 0; i < hd.script_w.size(); ++i) {
    int expected = hd.script_w[i].length() == hd.rs.num_positive() ? 0 : 2;
    CHECK(av_rank(hd, hd.script_w[i]) == expected);
    CHECK(mu_rank(hd, hd.script_w[i]) <= av_rank(hd, hd.script_w[i]));
  }
  auto sp = build_hermitian(GroupKind::SP, 3);
  CHECK_THROWS(av_rank(sp, sp.script_w[0]));
}

TEST_CASE("B_n root sets from the closed forms") {
  auto hd = build_hermitian(GroupKind::SO_ODD, 5);
  int n = 5;
  auto eps = [&](int i) {
    Vec v(n, Rat(0));
    v[i - 1] = 1;
    return v;
  };
  // w = w_k^+ with k < n: {e_1 - e_j : j = 2..n-k+1}
  for (int k = 1; k < n; ++k) {
    auto s = n_cap_nw(hd, build_wk(hd, k, Sign::PLUS));
    CHECK(static_cast<int>(s.size()) == n - k);
    for (int j = 2; j <= n - k + 1; ++j)
      CHECK(std::count(s.begin(), s.end(), hd.rs.root_index(sub(eps(1), eps(j)))) == 1);
  }
  CHECK(n_cap_nw(hd, build_wk(hd, n, Sign::PLUS)).empty());
  // w_1^-: {e_1} together with all e_1 - e_j
  auto s = n_cap_nw(hd, build_wk(hd, 1, Sign::MINUS));
  CHECK(static_cast<int>(s.size()) == n);
  CHECK(std::count(s.begin(), s.end(), hd.rs.root_index(eps(1))) == 1);
}
