#include "cchw/hermitian.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <filesystem>
#include <fstream>
#include <map>
#include <stdexcept>

#include "cchw/fixtures.hpp"
#include "json.hpp"

namespace cchw {

std::string to_string(GroupKind k) {
  switch (k) {
    case GroupKind::SU: return "su";
    case GroupKind::SO_ODD: return "so";
    case GroupKind::SP: return "sp";
    case GroupKind::SO_EVEN: return "so-even";
    case GroupKind::SO_STAR: return "so-star";
    case GroupKind::E6: return "e6";
    case GroupKind::E7: return "e7";
  }
  return "?";
}

bool strongly_orthogonal(const RootSystem& rs, const Vec& a, const Vec& b) {
  if (RootSystem::pairing(a, b) != 0) return false;
  return !rs.is_root(add(a, b)) && !rs.is_root(sub(a, b));
}

int HermitianDatum::script_w_index(const WeylElement& w) const {
  for (size_t i = 0; i < script_w.size(); ++i)
    if (script_w[i] == w) return static_cast<int>(i);
  return -1;
}

namespace {

int expected_real_rank(GroupKind kind, int rank, int split) {
  switch (kind) {
    case GroupKind::SU: return std::min(split, rank + 1 - split);
    case GroupKind::SO_ODD: return 2;
    case GroupKind::SP: return rank;
    case GroupKind::SO_EVEN: return 2;
    case GroupKind::SO_STAR: return rank / 2;
    case GroupKind::E6: return 2;
    case GroupKind::E7: return 3;
  }
  return 0;
}

const std::vector<fixtures::ExceptionalRow>* fixture_rows(GroupKind kind) {
  if (kind == GroupKind::E6) return &fixtures::e6_rows();
  if (kind == GroupKind::E7) return &fixtures::e7_rows();
  return nullptr;
}

std::vector<WeylElement> order_script_w(const HermitianDatum& hd,
                                        std::vector<WeylElement> elems);

}  // namespace

HermitianDatum build_hermitian(GroupKind kind, int rank, int split) {
  HermitianDatum hd;
  hd.kind = kind;
  switch (kind) {
    case GroupKind::SU:
      if (split < 1 || split > rank)
        throw std::invalid_argument("su: need 1 <= p <= rank (rank = p+q-1)");
      hd.rs = RootSystem::build(LieType::A, rank);
      hd.noncompact = split;
      break;
    case GroupKind::SO_ODD:
      hd.rs = RootSystem::build(LieType::B, rank);
      hd.noncompact = 1;
      break;
    case GroupKind::SP:
      hd.rs = RootSystem::build(LieType::C, rank);
      hd.noncompact = rank;
      break;
    case GroupKind::SO_EVEN:
      hd.rs = RootSystem::build(LieType::D, rank);
      hd.noncompact = 1;
      break;
    case GroupKind::SO_STAR:
      hd.rs = RootSystem::build(LieType::D, rank);
      hd.noncompact = rank;
      break;
    case GroupKind::E6:
      if (rank != 6) throw std::invalid_argument("e6 has rank 6");
      hd.rs = RootSystem::build(LieType::E6, 6);
      hd.noncompact = 1;
      break;
    case GroupKind::E7:
      if (rank != 7) throw std::invalid_argument("e7 has rank 7");
      hd.rs = RootSystem::build(LieType::E7, 7);
      hd.noncompact = 7;
      break;
  }
  hd.rank = hd.rs.rank();

  for (int i = 1; i <= hd.rank; ++i)
    if (i != hd.noncompact) hd.compact_simples.push_back(i);

  int N = hd.rs.num_positive();
  for (int r = 0; r < N; ++r) {
    int c = hd.rs.coeffs(r)[hd.noncompact - 1];
    if (c == 0)
      hd.compact_pos.push_back(r);
    else if (c == 1)
      hd.p_plus.push_back(r);
    else
      throw std::runtime_error("not hermitian: noncompact coefficient > 1");
  }
  if (hd.p_plus.size() > 64) throw std::invalid_argument("p_+ too large (> 64 roots)");

  // strongly orthogonal cascade: highest root of the remainder, repeatedly
  std::vector<int> remainder = hd.p_plus;
  while (!remainder.empty()) {
    int best = remainder.front();
    for (int r : remainder)
      if (hd.rs.height(r) > hd.rs.height(best)) best = r;
    Vec g = hd.rs.positive_roots()[best];
    hd.cascade.push_back(g);
    std::vector<int> next;
    for (int r : remainder)
      if (strongly_orthogonal(hd.rs, hd.rs.positive_roots()[r], g)) next.push_back(r);
    remainder = next;
  }
  hd.real_rank = static_cast<int>(hd.cascade.size());
  if (hd.real_rank != expected_real_rank(kind, rank, split))
    throw std::runtime_error("cascade length does not match the real rank");

  Rat max_len = 0;
  for (int r : hd.p_plus) {
    const Vec& v = hd.rs.positive_roots()[r];
    max_len = std::max(max_len, RootSystem::pairing(v, v));
  }
  for (size_t a = 0; a < hd.p_plus.size(); ++a) {
    const Vec& va = hd.rs.positive_roots()[hd.p_plus[a]];
    hd.root_rank.push_back(RootSystem::pairing(va, va) == max_len ? 1 : 2);
    uint64_t mask = 0;
    for (size_t b = 0; b < hd.p_plus.size(); ++b) {
      if (a == b) continue;
      const Vec& vb = hd.rs.positive_roots()[hd.p_plus[b]];
      if (strongly_orthogonal(hd.rs, va, vb)) mask |= (uint64_t{1} << b);
    }
    hd.so_mask.push_back(mask);
  }

  hd.script_w = enumerate_script_w(hd);
  return hd;
}

std::vector<int> n_cap_nw(const HermitianDatum& hd, const WeylElement& w) {
  WeylElement winv = w.inverse();
  int N = hd.rs.num_positive();
  std::vector<int> out;
  for (int r = 0; r < N; ++r)
    if (winv.image_index(r) < N) out.push_back(r);
  return out;
}

bool in_script_w(const HermitianDatum& hd, const WeylElement& w) {
  Vec v = negate(w.apply(hd.rs.rho()));
  for (int j : hd.compact_simples)
    if (RootSystem::pairing(v, hd.rs.simple_roots()[j - 1]) <= 0) return false;
  return true;
}

namespace {

// max weighted strongly-orthogonal subset by branch and bound over a mask
int best_so_subset(const HermitianDatum& hd, const std::vector<int>& members) {
  int m = static_cast<int>(members.size());
  // position within p_plus -> local index
  std::map<int, int> local;
  for (size_t i = 0; i < hd.p_plus.size(); ++i) local[hd.p_plus[i]] = static_cast<int>(i);

  std::vector<int> li;  // local indices of the member roots
  for (int r : members) {
    auto it = local.find(r);
    if (it == local.end()) throw std::runtime_error("root set not inside p_+");
    li.push_back(it->second);
  }
  int best = 0;
  // combinations in increasing order; candidates tracked as a mask over li
  std::function<void(int, uint64_t, int)> go = [&](int start, uint64_t allowed, int acc) {
    // bound: even if everything remaining were rank 2
    int remaining = 0;
    for (int i = start; i < m; ++i)
      if (allowed & (uint64_t{1} << i)) remaining += hd.root_rank[li[i]];
    if (acc + remaining <= best) return;
    best = std::max(best, acc);
    for (int i = start; i < m; ++i) {
      if (!(allowed & (uint64_t{1} << i))) continue;
      uint64_t next = allowed;
      for (int jj = 0; jj < m; ++jj)
        if (!(hd.so_mask[li[i]] & (uint64_t{1} << li[jj]))) next &= ~(uint64_t{1} << jj);
      go(i + 1, next, acc + hd.root_rank[li[i]]);
    }
  };
  uint64_t all = (m >= 64) ? ~uint64_t{0} : ((uint64_t{1} << m) - 1);
  go(0, all, 0);
  return best;
}

}  // namespace

int mu_rank_heuristic(const HermitianDatum& hd, const WeylElement& w) {
  auto members = n_cap_nw(hd, w);
  for (int r : members) {
    if (hd.rs.coeffs(r)[hd.noncompact - 1] != 1)
      throw std::runtime_error("n cap n^w not inside p_+ (w outside the parameter set?)");
  }
  return best_so_subset(hd, members);
}

int mu_rank(const HermitianDatum& hd, const WeylElement& w) {
  int idx = hd.script_w_index(w);
  if (idx < 0) throw std::invalid_argument("mu_rank: w not in the parameter set");
  int h = mu_rank_heuristic(hd, w);
  switch (hd.kind) {
    case GroupKind::E6:
    case GroupKind::E7: {
      int fixture = fixture_rows(hd.kind)->at(idx).av;
      if (fixture != h)
        throw std::runtime_error("mu-rank heuristic disagrees with reference data at row " +
                                 std::to_string(idx + 1));
      return fixture;
    }
    case GroupKind::SO_ODD: {
      // (k, sign) layout: index 2(k-1) + (sign == minus)
      bool minus = idx % 2 == 1;
      int k = idx / 2 + 1;
      int closed = minus ? 2 : (k == hd.rank ? 0 : 1);
      if (closed != h)
        throw std::runtime_error("mu-rank heuristic disagrees with the closed form at k=" +
                                 std::to_string(k));
      return closed;
    }
    default:
      return h;
  }
}

int av_rank(const HermitianDatum& hd, const WeylElement& w) {
  int idx = hd.script_w_index(w);
  if (idx < 0) throw std::invalid_argument("av_rank: w not in the parameter set");
  switch (hd.kind) {
    case GroupKind::E6:
    case GroupKind::E7:
      return fixture_rows(hd.kind)->at(idx).av;
    case GroupKind::SO_ODD:
      // O_2-bar for every parameter except the trivial one (w = w_0)
      return w.length() == hd.rs.num_positive() ? 0 : 2;
    case GroupKind::SU:
    case GroupKind::SO_EVEN:
    case GroupKind::SO_STAR:
      // irreducible characteristic cycle, so AV = mu(conormal of w)
      return mu_rank_heuristic(hd, w);
    case GroupKind::SP:
      throw std::invalid_argument("av_rank: type C is parametrized by clans");
  }
  return -1;
}

namespace {

std::vector<WeylElement> order_script_w(const HermitianDatum& hd,
                                        std::vector<WeylElement> elems) {
  const auto* rows = fixture_rows(hd.kind);
  if (rows) {
    auto w0c = long_element(hd.rs, hd.compact_simples);
    std::vector<WeylElement> ordered;
    for (const auto& row : *rows) {
      WeylElement w = w0c * WeylElement::from_word(hd.rs, row.word);
      auto it = std::find(elems.begin(), elems.end(), w);
      if (it == elems.end())
        throw std::runtime_error("reference word not found in the enumerated parameter set");
      ordered.push_back(*it);
      elems.erase(it);
    }
    if (!elems.empty()) throw std::runtime_error("parameter set larger than the reference list");
    return ordered;
  }
  if (hd.kind == GroupKind::SO_ODD) {
    // sort by (k, +/-): -w rho = (+-(k - 1/2), ...)
    std::vector<std::pair<std::pair<int, int>, WeylElement>> keyed;
    for (auto& w : elems) {
      Rat c = negate(w.apply(hd.rs.rho()))[0];
      Rat kk = abs(c) + Rat(1, 2);  // exactly k
      if (denominator(kk) != 1) throw std::runtime_error("unexpected -w rho coordinate");
      int k = numerator(kk).convert_to<int>();
      keyed.push_back({{k, c > 0 ? 0 : 1}, w});
    }
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<WeylElement> ordered;
    for (auto& [k, w] : keyed) ordered.push_back(w);
    return ordered;
  }
  std::sort(elems.begin(), elems.end(), [](const WeylElement& a, const WeylElement& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.reduced_word() < b.reduced_word();
  });
  return elems;
}

}  // namespace

std::vector<WeylElement> enumerate_script_w(const HermitianDatum& hd) {
  const RootSystem& rs = hd.rs;
  auto w0c = long_element(rs, hd.compact_simples);

  if (hd.kind == GroupKind::E7) {
    if (auto cached = load_script_w_cache(hd.kind, hd.rank)) {
      std::vector<WeylElement> out;
      for (const auto& word : *cached) {
        WeylElement w = WeylElement::from_word(rs, word);
        if (!in_script_w(hd, w)) {
          out.clear();
          break;
        }
        out.push_back(w);
      }
      if (out.size() == 56) return order_script_w(hd, std::move(out));
    }
  }

  // Minimal coset representatives of W / W_c correspond to the orbit of the
  // fundamental weight dual to the noncompact simple root; breadth-first
  // search going down from the dominant weight. The parameters are
  // w = w_0(W_c) u^{-1} over minimal representatives u.
  Vec start = rs.fundamental_weight(hd.noncompact);
  std::map<Vec, std::vector<int>> word_of;  // weight -> word of u (left-mult letters)
  std::deque<Vec> queue;
  word_of[start] = {};
  queue.push_back(start);
  std::vector<std::vector<int>> min_words;
  while (!queue.empty()) {
    Vec mu = queue.front();
    queue.pop_front();
    min_words.push_back(word_of[mu]);
    for (int i = 1; i <= rs.rank(); ++i) {
      const Vec& a = rs.simple_roots()[i - 1];
      if (RootSystem::pairing(mu, a) > 0) {
        Vec nu = RootSystem::reflect(mu, a);
        if (!word_of.count(nu)) {
          std::vector<int> word = {i};
          auto& base = word_of[mu];
          word.insert(word.end(), base.begin(), base.end());
          word_of[nu] = word;
          queue.push_back(nu);
        }
      }
    }
  }

  std::vector<WeylElement> out;
  out.reserve(min_words.size());
  for (const auto& uw : min_words) {
    std::vector<int> inv(uw.rbegin(), uw.rend());
    WeylElement w = w0c * WeylElement::from_word(rs, inv);
    if (w.length() != w0c.length() + static_cast<int>(inv.size()))
      throw std::runtime_error("coset representative lengths failed to add");
    if (!in_script_w(hd, w))
      throw std::runtime_error("enumerated element fails the dominance condition");
    out.push_back(w);
  }

  out = order_script_w(hd, std::move(out));
  if (hd.kind == GroupKind::E7) save_script_w_cache(hd.kind, hd.rank, out);
  return out;
}

namespace {

std::optional<std::filesystem::path> cache_file(GroupKind kind, int rank) {
  const char* dir = std::getenv("CCHW_CACHE_DIR");
  if (!dir || !*dir) return std::nullopt;
  return std::filesystem::path(dir) /
         ("script_w_" + to_string(kind) + "_" + std::to_string(rank) + ".json");
}

}  // namespace

std::optional<std::vector<std::vector<int>>> load_script_w_cache(GroupKind kind, int rank) {
  auto path = cache_file(kind, rank);
  if (!path || !std::filesystem::exists(*path)) return std::nullopt;
  try {
    std::ifstream in(*path);
    nlohmann::json j;
    in >> j;
    if (j.value("schema", 0) != 1) return std::nullopt;
    if (j.value("convention", std::string()) != fixtures::kReferenceVersion) return std::nullopt;
    if (j.value("kind", std::string()) != to_string(kind)) return std::nullopt;
    if (j.value("rank", -1) != rank) return std::nullopt;
    return j.at("words").get<std::vector<std::vector<int>>>();
  } catch (...) {
    return std::nullopt;
  }
}

void save_script_w_cache(GroupKind kind, int rank, const std::vector<WeylElement>& elems) {
  auto path = cache_file(kind, rank);
  if (!path) return;
  try {
    nlohmann::json j;
    j["schema"] = 1;
    j["convention"] = fixtures::kReferenceVersion;
    j["kind"] = to_string(kind);
    j["rank"] = rank;
    auto& words = j["words"];
    words = nlohmann::json::array();
    for (const auto& w : elems) words.push_back(w.reduced_word());
    std::filesystem::create_directories(path->parent_path());
    std::ofstream out(*path);
    out << j.dump(2) << "\n";
  } catch (...) {
    // cache is best effort
  }
}

}  // namespace cchw
