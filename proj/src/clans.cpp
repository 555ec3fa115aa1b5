#include "cchw/clans.hpp"

#include <algorithm>
#include <boost/math/constants/constants.hpp>
#include <cctype>
#include <stdexcept>

namespace cchw {

Clan parse_clan(const std::string& s) {
  Clan c;
  for (char ch : s) {
    if (ch == '+')
      c.plus.push_back(true);
    else if (std::isalnum(static_cast<unsigned char>(ch)))
      c.plus.push_back(false);
    else if (ch == ' ' || ch == '\t')
      continue;
    else
      throw std::invalid_argument(std::string("bad clan character '") + ch + "'");
  }
  if (c.plus.empty()) throw std::invalid_argument("empty clan");
  return c;
}

std::string format_clan(const Clan& c) {
  static const char* symbols = "123456789abcdefghijklmnopqrstuvwxyz";
  std::string out;
  int dot = 0;
  for (bool p : c.plus) {
    if (p)
      out += '+';
    else
      out += symbols[dot++ % 35];
  }
  return out;
}

std::vector<int> h_vector(const Clan& c) {
  int n = c.size();
  std::vector<int> h(n);
  h[0] = c.plus[n - 1] ? 1 : 0;
  for (int j = 2; j <= n; ++j) {
    int prev = h[j - 2];
    if (!c.plus[n - j])
      h[j - 1] = prev;
    else if (prev == j - 1)
      h[j - 1] = prev + 1;
    else
      h[j - 1] = prev + 2;
  }
  return h;
}

int geometric_cell(const Clan& c) { return h_vector(c).back(); }

std::set<int> j_set(const Clan& c) {
  int n = c.size();
  auto h = h_vector(c);
  std::set<int> a, b;
  for (int j = 1; j <= n - 1; ++j) {
    if (j % 2 == 1 && h[j - 1] == j && h[j] == j) a.insert(j);
    if (j % 2 == 1 && h[j - 1] == j && !c.plus[n - j - 1]) b.insert(j);
  }
  if (a != b) throw std::runtime_error("j_set: the two formulations disagree");
  return a;
}

std::set<Clan> d_set_recursive(const Clan& c) {
  int n = c.size();
  if (n == 1) return {c};
  Clan tail{std::vector<bool>(c.plus.begin() + 1, c.plus.end())};
  auto dtail = d_set_recursive(tail);
  auto prepend = [](bool p, const std::set<Clan>& s) {
    std::set<Clan> out;
    for (const Clan& d : s) {
      Clan e;
      e.plus.push_back(p);
      e.plus.insert(e.plus.end(), d.plus.begin(), d.plus.end());
      out.insert(e);
    }
    return out;
  };
  if (c.plus[0]) return prepend(true, dtail);
  bool doubling = n % 2 == 0 && geometric_cell(tail) == n - 1;
  std::set<Clan> out = prepend(false, dtail);
  if (doubling) {
    auto extra = prepend(true, dtail);
    out.insert(extra.begin(), extra.end());
  }
  return out;
}

std::set<Clan> d_set_closed(const Clan& c) {
  int n = c.size();
  std::vector<int> free_pos;  // 1-based string positions n - j
  for (int j : j_set(c)) free_pos.push_back(n - j);
  std::set<Clan> out;
  for (uint64_t mask = 0; mask < (uint64_t{1} << free_pos.size()); ++mask) {
    Clan d = c;
    for (size_t b = 0; b < free_pos.size(); ++b)
      d.plus[free_pos[b] - 1] = (mask >> b) & 1;
    out.insert(d);
  }
  return out;
}

bool is_cc_irreducible(const Clan& c) { return j_set(c).empty(); }

std::set<Clan> ltc_terms(const Clan& c) {
  auto d = d_set_closed(c);
  int best = 0;
  for (const Clan& t : d) best = std::max(best, geometric_cell(t));
  std::set<Clan> out;
  for (const Clan& t : d)
    if (geometric_cell(t) == best) out.insert(t);
  return out;
}

namespace {

template <typename F>
void for_each_clan(int n, F&& f) {
  if (n < 1 || n > 30) throw std::invalid_argument("clan enumeration limited to 1 <= n <= 30");
  for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
    Clan c;
    c.plus.resize(n);
    for (int i = 0; i < n; ++i) c.plus[i] = (mask >> i) & 1;
    f(c);
  }
}

}  // namespace

BigInt count_irreducible(int n) {
  BigInt count = 0;
  for_each_clan(n, [&](const Clan& c) {
    if (is_cc_irreducible(c)) ++count;
  });
  return count;
}

BigInt count_irreducible_by_cell(int n, int j) {
  BigInt count = 0;
  for_each_clan(n, [&](const Clan& c) {
    if (geometric_cell(c) == j && is_cc_irreducible(c)) ++count;
  });
  return count;
}

BigInt path_count_oracle(int n, int j, bool restricted) {
  if (n < 0 || j < 0) throw std::invalid_argument("path_count_oracle: negative argument");
  // column m holds labels v = m, m-2, ..., (0 or 1); steps west/southwest from
  // the top entry, northwest/southwest below it
  std::vector<BigInt> ways(n + 3, 0);
  ways[0] = 1;
  for (int m = 0; m < n; ++m) {
    std::vector<BigInt> next(n + 3, 0);
    for (int v = 0; v <= m; ++v) {
      if (ways[v] == 0) continue;
      next[v] += ways[v];  // dot entry keeps the label
      if (v == m)
        next[v + 1] += ways[v];  // plus at the top row
      else
        next[v + 2] += ways[v];  // plus below the top row
    }
    if (restricted) {
      // no odd label below the top row of column m+1
      for (int v = 0; v <= m; ++v)
        if (v % 2 == 1) next[v] = 0;
    }
    ways = std::move(next);
  }
  return j <= n ? ways[j] : BigInt(0);
}

BigInt path_count_total(int n, bool restricted) {
  BigInt total = 0;
  for (int j = 0; j <= n; ++j) total += path_count_oracle(n, j, restricted);
  return total;
}

Float50 asymptotic_ratio(int l) {
  if (l < 1) throw std::invalid_argument("asymptotic_ratio needs l >= 1");
  BigInt n2l = path_count_total(2 * l, true);
  Float50 fraction = Float50(n2l) / boost::multiprecision::pow(Float50(2), 2 * l);
  Float50 asym = 2 / boost::multiprecision::sqrt(boost::math::constants::pi<Float50>() *
                                                 Float50(l));
  return fraction / asym;
}

}  // namespace cchw
