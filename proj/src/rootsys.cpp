#include "cchw/rootsys.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>
#include <stdexcept>

namespace cchw {

Rat dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec add(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("add: dimension mismatch");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("sub: dimension mismatch");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec scale(const Rat& c, const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

Vec negate(const Vec& a) { return scale(-1, a); }

bool is_zero(const Vec& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

std::string to_string(const Rat& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

std::string to_string(const Vec& v) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  os << ")";
  return os.str();
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

std::string to_string(LieType t) {
  switch (t) {
    case LieType::A: return "A";
    case LieType::B: return "B";
    case LieType::C: return "C";
    case LieType::D: return "D";
    case LieType::E6: return "E6";
    case LieType::E7: return "E7";
  }
  return "?";
}

Rat RootSystem::pairing(const Vec& a, const Vec& b) { return dot(a, b); }

Vec RootSystem::reflect(const Vec& v, const Vec& a) {
  Rat aa = dot(a, a);
  if (aa == 0) throw std::invalid_argument("reflect: zero vector");
  Rat c = 2 * dot(v, a) / aa;
  return sub(v, scale(c, a));
}

namespace {

Vec unit(int dim, int i) {
  Vec v(dim, Rat(0));
  v[i] = 1;
  return v;
}

std::vector<Vec> simple_roots_for(LieType t, int rank, int& dim) {
  std::vector<Vec> s;
  switch (t) {
    case LieType::A: {
      if (rank < 1) throw std::invalid_argument("A_n requires n >= 1");
      dim = rank + 1;
      for (int i = 0; i < rank; ++i) s.push_back(sub(unit(dim, i), unit(dim, i + 1)));
      break;
    }
    case LieType::B: {
      if (rank < 2) throw std::invalid_argument("B_n requires n >= 2");
      dim = rank;
      for (int i = 0; i + 1 < rank; ++i) s.push_back(sub(unit(dim, i), unit(dim, i + 1)));
      s.push_back(unit(dim, rank - 1));
      break;
    }
    case LieType::C: {
      if (rank < 1) throw std::invalid_argument("C_n requires n >= 1");
      dim = rank;
      for (int i = 0; i + 1 < rank; ++i) s.push_back(sub(unit(dim, i), unit(dim, i + 1)));
      s.push_back(scale(2, unit(dim, rank - 1)));
      break;
    }
    case LieType::D: {
      if (rank < 3) throw std::invalid_argument("D_n requires n >= 3");
      dim = rank;
      for (int i = 0; i + 1 < rank; ++i) s.push_back(sub(unit(dim, i), unit(dim, i + 1)));
      s.push_back(add(unit(dim, rank - 2), unit(dim, rank - 1)));
      break;
    }
    case LieType::E6:
    case LieType::E7: {
      int n = (t == LieType::E6) ? 6 : 7;
      if (rank != n) throw std::invalid_argument("E rank must be 6 or 7");
      dim = 8;
      Vec a1(8, Rat(-1, 2));
      a1[0] = Rat(1, 2);
      a1[7] = Rat(1, 2);
      s.push_back(a1);
      s.push_back(add(unit(8, 0), unit(8, 1)));
      for (int i = 0; i + 3 <= n; ++i) s.push_back(sub(unit(8, i + 1), unit(8, i)));
      break;
    }
  }
  return s;
}

}  // namespace

RootSystem RootSystem::build(LieType type, int rank) {
  RootSystem rs;
  rs.type_ = type;
  rs.rank_ = rank;
  rs.simple_ = simple_roots_for(type, rank, rs.dim_);
  rs.finish_build();
  return rs;
}

void RootSystem::finish_build() {
  // Orbit of the simple roots under simple reflections = the whole system.
  std::set<Vec> all(simple_.begin(), simple_.end());
  std::deque<Vec> queue(simple_.begin(), simple_.end());
  while (!queue.empty()) {
    Vec r = queue.front();
    queue.pop_front();
    for (const Vec& a : simple_) {
      Vec img = reflect(r, a);
      if (all.insert(img).second) queue.push_back(img);
    }
  }

  // Simple-root coordinates via Gaussian elimination on [S | r].
  auto expand = [&](const Vec& r) -> std::vector<Rat> {
    size_t m = dim_, k = simple_.size();
    std::vector<Vec> aug(m, Vec(k + 1, Rat(0)));
    for (size_t i = 0; i < m; ++i) {
      for (size_t j = 0; j < k; ++j) aug[i][j] = simple_[j][i];
      aug[i][k] = r[i];
    }
    std::vector<int> pivot_col(m, -1);
    size_t row = 0;
    for (size_t col = 0; col < k && row < m; ++col) {
      size_t p = row;
      while (p < m && aug[p][col] == 0) ++p;
      if (p == m) continue;
      std::swap(aug[p], aug[row]);
      Rat inv = Rat(1) / aug[row][col];
      for (size_t j = col; j <= k; ++j) aug[row][j] *= inv;
      for (size_t i = 0; i < m; ++i) {
        if (i == row || aug[i][col] == 0) continue;
        Rat f = aug[i][col];
        for (size_t j = col; j <= k; ++j) aug[i][j] -= f * aug[row][j];
      }
      pivot_col[row] = static_cast<int>(col);
      ++row;
    }
    std::vector<Rat> c(k, Rat(0));
    for (size_t i = 0; i < row; ++i) c[pivot_col[i]] = aug[i][k];
    for (size_t i = row; i < m; ++i)
      if (aug[i][k] != 0) throw std::runtime_error("root outside simple span");
    return c;
  };

  std::vector<std::pair<std::vector<int>, Vec>> pos;
  for (const Vec& r : all) {
    auto c = expand(r);
    bool nonneg = true, nonpos = true;
    std::vector<int> ci(c.size());
    for (size_t j = 0; j < c.size(); ++j) {
      if (denominator(c[j]) != 1) throw std::runtime_error("non-integral root coefficient");
      ci[j] = static_cast<int>(numerator(c[j]));
      nonneg = nonneg && ci[j] >= 0;
      nonpos = nonpos && ci[j] <= 0;
    }
    if (!nonneg && !nonpos) throw std::runtime_error("root with mixed signs");
    if (nonneg) pos.emplace_back(std::move(ci), r);
  }
  std::sort(pos.begin(), pos.end(), [](const auto& a, const auto& b) {
    int ha = 0, hb = 0;
    for (int x : a.first) ha += x;
    for (int x : b.first) hb += x;
    if (ha != hb) return ha < hb;
    return a.first < b.first;
  });

  positive_.reserve(pos.size());
  coeffs_.reserve(pos.size());
  for (auto& [c, r] : pos) {
    coeffs_.push_back(c);
    positive_.push_back(r);
  }

  int N = num_positive();
  for (int r = 0; r < N; ++r) {
    index_[positive_[r]] = r;
    index_[negate(positive_[r])] = N + r;
  }

  rho_ = Vec(dim_, Rat(0));
  for (const Vec& r : positive_) rho_ = add(rho_, r);
  rho_ = scale(Rat(1, 2), rho_);

  simple_pos_.resize(rank_);
  for (int i = 0; i < rank_; ++i) simple_pos_[i] = index_.at(simple_[i]);

  sperm_.assign(rank_, std::vector<uint16_t>(2 * N));
  for (int i = 0; i < rank_; ++i) {
    for (int r = 0; r < 2 * N; ++r) {
      Vec img = reflect(root_vector(r), simple_[i]);
      sperm_[i][r] = static_cast<uint16_t>(index_.at(img));
    }
  }
}

Vec RootSystem::root_vector(int idx) const {
  int N = num_positive();
  if (idx < 0 || idx >= 2 * N) throw std::out_of_range("root index");
  return idx < N ? positive_[idx] : negate(positive_[idx - N]);
}

int RootSystem::root_index(const Vec& v) const {
  auto it = index_.find(v);
  return it == index_.end() ? -1 : it->second;
}

int RootSystem::negate_index(int idx) const {
  int N = num_positive();
  return idx < N ? idx + N : idx - N;
}

int RootSystem::height(int pos_idx) const {
  int h = 0;
  for (int c : coeffs_.at(pos_idx)) h += c;
  return h;
}

Rat RootSystem::cartan(int j, int i) const {
  const Vec& aj = simple_.at(j - 1);
  const Vec& ai = simple_.at(i - 1);
  return 2 * dot(aj, ai) / dot(ai, ai);
}

Vec RootSystem::fundamental_weight(int i) const {
  // solve sum_k c_k <a_k, a_j^v> = delta_{ij} over the simple basis
  int n = rank_;
  std::vector<Vec> aug(n, Vec(n + 1, Rat(0)));
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) aug[j][k] = cartan(k + 1, j + 1);
    aug[j][n] = (j == i - 1) ? 1 : 0;
  }
  for (int col = 0; col < n; ++col) {
    int p = col;
    while (p < n && aug[p][col] == 0) ++p;
    if (p == n) throw std::runtime_error("singular Cartan matrix");
    std::swap(aug[p], aug[col]);
    Rat inv = Rat(1) / aug[col][col];
    for (int j = col; j <= n; ++j) aug[col][j] *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || aug[r][col] == 0) continue;
      Rat f = aug[r][col];
      for (int j = col; j <= n; ++j) aug[r][j] -= f * aug[col][j];
    }
  }
  Vec w(dim_, Rat(0));
  for (int k = 0; k < n; ++k) w = add(w, scale(aug[k][n], simple_[k]));
  return w;
}

}  // namespace cchw
