#include "cchw/weyl.hpp"

#include <numeric>
#include <stdexcept>

namespace cchw {

WeylElement WeylElement::identity(const RootSystem& rs) {
  std::vector<uint16_t> p(2 * rs.num_positive());
  std::iota(p.begin(), p.end(), 0);
  return WeylElement(&rs, std::move(p), 0);
}

int WeylElement::count_inversions(const RootSystem& rs, const std::vector<uint16_t>& p) {
  int N = rs.num_positive(), len = 0;
  for (int r = 0; r < N; ++r)
    if (p[r] >= N) ++len;
  return len;
}

WeylElement WeylElement::from_word(const RootSystem& rs, const std::vector<int>& word) {
  WeylElement w = identity(rs);
  for (int i : word) w = w.times_simple(i);
  return w;
}

WeylElement WeylElement::from_action(const RootSystem& rs,
                                     const std::function<Vec(const Vec&)>& act) {
  int N = rs.num_positive();
  std::vector<uint16_t> p(2 * N);
  for (int r = 0; r < 2 * N; ++r) {
    int idx = rs.root_index(act(rs.root_vector(r)));
    if (idx < 0) throw std::invalid_argument("from_action: image is not a root");
    p[r] = static_cast<uint16_t>(idx);
  }
  int len = count_inversions(rs, p);
  return WeylElement(&rs, std::move(p), len);
}

bool WeylElement::sends_simple_negative(int i) const {
  return perm_[rs_->simple_position(i)] >= rs_->num_positive();
}

std::vector<int> WeylElement::tau() const {
  std::vector<int> t;
  for (int i = 1; i <= rs_->rank(); ++i)
    if (sends_simple_negative(i)) t.push_back(i);
  return t;
}

int WeylElement::first_descent() const {
  for (int i = 1; i <= rs_->rank(); ++i)
    if (sends_simple_negative(i)) return i;
  return 0;
}

WeylElement WeylElement::times_simple(int i) const {
  if (i < 1 || i > rs_->rank()) throw std::out_of_range("simple index");
  const auto& sp = rs_->simple_perm(i);
  std::vector<uint16_t> p(perm_.size());
  for (size_t r = 0; r < perm_.size(); ++r) p[r] = perm_[sp[r]];
  int len = len_ + (sends_simple_negative(i) ? -1 : 1);
  return WeylElement(rs_, std::move(p), len);
}

WeylElement WeylElement::simple_times(int i) const {
  if (i < 1 || i > rs_->rank()) throw std::out_of_range("simple index");
  const auto& sp = rs_->simple_perm(i);
  std::vector<uint16_t> p(perm_.size());
  for (size_t r = 0; r < perm_.size(); ++r) p[r] = sp[perm_[r]];
  int len = count_inversions(*rs_, p);
  return WeylElement(rs_, std::move(p), len);
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
  if (rs_ != o.rs_) throw std::invalid_argument("product across root systems");
  std::vector<uint16_t> p(perm_.size());
  for (size_t r = 0; r < perm_.size(); ++r) p[r] = perm_[o.perm_[r]];
  int len = count_inversions(*rs_, p);
  return WeylElement(rs_, std::move(p), len);
}

WeylElement WeylElement::inverse() const {
  std::vector<uint16_t> p(perm_.size());
  for (size_t r = 0; r < perm_.size(); ++r) p[perm_[r]] = static_cast<uint16_t>(r);
  return WeylElement(rs_, std::move(p), len_);
}

std::vector<int> WeylElement::reduced_word() const {
  std::vector<int> strip;
  WeylElement w = *this;
  while (!w.is_identity()) {
    int i = w.first_descent();
    w = w.times_simple(i);
    strip.push_back(i);
  }
  return {strip.rbegin(), strip.rend()};
}

Vec WeylElement::apply(const Vec& v) const {
  auto word = reduced_word();
  Vec r = v;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    r = RootSystem::reflect(r, rs_->simple_roots()[*it - 1]);
  return r;
}

size_t WeylElement::hash() const {
  size_t h = 1469598103934665603ull;
  for (uint16_t x : perm_) {
    h ^= x;
    h *= 1099511628211ull;
  }
  return h;
}

bool bruhat_leq(const WeylElement& y0, const WeylElement& w0) {
  if (&y0.root_system() != &w0.root_system())
    throw std::invalid_argument("bruhat_leq across root systems");
  WeylElement y = y0, w = w0;
  int ly = y.length(), lw = w.length();
  while (lw > 0) {
    if (ly > lw) return false;
    if (ly == 0) return true;
    int i = w.first_descent();
    w = w.times_simple(i);
    --lw;
    if (y.sends_simple_negative(i)) {
      y = y.times_simple(i);
      --ly;
    }
  }
  return ly == 0;
}

WeylElement long_element(const RootSystem& rs, const std::vector<int>& subset) {
  WeylElement w = WeylElement::identity(rs);
  bool progress = true;
  while (progress) {
    progress = false;
    for (int i : subset) {
      if (!w.sends_simple_negative(i)) {
        w = w.times_simple(i);
        progress = true;
      }
    }
  }
  return w;
}

}  // namespace cchw
