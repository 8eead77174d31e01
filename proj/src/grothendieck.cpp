#include "sl3/grothendieck.hpp"

#include <algorithm>
#include <limits>
#include <mutex>
#include <string>
#include <vector>

#include "sl3/error.hpp"

namespace sl3 {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(Errc::Overflow, "integer addition");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(Errc::Overflow, "integer multiplication");
  return r;
}

void require_label(HWLabel l) {
  if (l.i < 0 || l.j < 0)
    throw Error(Errc::InvalidArgument, "highest weight labels must be non-negative");
}

}  // namespace

bool monomial_less(const Monomial& a, const Monomial& b) noexcept {
  const auto da = a.x + a.y, db = b.x + b.y;
  if (da != db) return da < db;
  return a.x < b.x;
}

Poly2 Poly2::constant(std::int64_t c) { return monomial({0, 0}, c); }
Poly2 Poly2::x() { return monomial({1, 0}); }
Poly2 Poly2::y() { return monomial({0, 1}); }

Poly2 Poly2::monomial(Monomial m, std::int64_t c) {
  Poly2 p;
  p.add_term(m, c);
  return p;
}

std::int64_t Poly2::coeff(Monomial m) const noexcept {
  const auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

Monomial Poly2::leading() const {
  if (terms_.empty()) throw Error(Errc::InvalidArgument, "zero polynomial has no leading term");
  return std::max_element(terms_.begin(), terms_.end(),
                          [](const auto& a, const auto& b) { return monomial_less(a.first, b.first); })
      ->first;
}

void Poly2::add_term(Monomial m, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second = checked_add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

Poly2& Poly2::operator+=(const Poly2& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly2& Poly2::operator-=(const Poly2& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
  Poly2 r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term({ma.x + mb.x, ma.y + mb.y}, checked_mul(ca, cb));
  return r;
}

Poly2 operator*(std::int64_t k, const Poly2& a) {
  Poly2 r;
  for (const auto& [m, c] : a.terms_) r.add_term(m, checked_mul(k, c));
  return r;
}

std::int64_t Poly2::eval(std::int64_t x, std::int64_t y) const {
  // Single terms can exceed 64 bits even when the value does not (U_{i,j}(3,3)
  // for i + j = 40), so accumulate in 128 bits.
  __extension__ typedef __int128 wide;
  auto mul = [](wide a, wide b) {
    wide r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error(Errc::Overflow, "polynomial evaluation");
    return r;
  };
  wide total = 0;
  for (const auto& [m, c] : terms_) {
    wide t = c;
    for (std::int64_t k = 0; k < m.x; ++k) t = mul(t, x);
    for (std::int64_t k = 0; k < m.y; ++k) t = mul(t, y);
    if (__builtin_add_overflow(total, t, &total)) throw Error(Errc::Overflow, "polynomial evaluation");
  }
  if (total > std::numeric_limits<std::int64_t>::max() || total < std::numeric_limits<std::int64_t>::min())
    throw Error(Errc::Overflow, "polynomial value exceeds 64 bits");
  return static_cast<std::int64_t>(total);
}

Poly2 Poly2::swapped() const {
  Poly2 r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(Monomial{m.y, m.x}, c);
  return r;
}

std::ostream& operator<<(std::ostream& os, const Poly2& p) {
  if (p.is_zero()) return os << '0';
  std::vector<std::pair<Monomial, std::int64_t>> terms(p.terms().begin(), p.terms().end());
  std::sort(terms.begin(), terms.end(),
            [](const auto& a, const auto& b) { return monomial_less(b.first, a.first); });
  bool first = true;
  for (const auto& [m, c] : terms) {
    const bool unit = (c == 1 || c == -1) && (m.x != 0 || m.y != 0);
    if (c < 0) os << (first ? "-" : " - ");
    else if (!first) os << " + ";
    if (!unit) os << (c < 0 ? -c : c);
    if (m.x) os << 'x' << (m.x > 1 ? "^" + std::to_string(m.x) : "");
    if (m.y) os << 'y' << (m.y > 1 ? "^" + std::to_string(m.y) : "");
    first = false;
  }
  return os;
}

std::ostream& operator<<(std::ostream& os, const HWLabel& l) {
  return os << '(' << l.i << ',' << l.j << ')';
}

Poly2 upoly(HWLabel l) {
  require_label(l);
  // Insert-only cache; entries never change once written.
  static std::mutex mu;
  static std::map<HWLabel, Poly2> memo{{{0, 0}, Poly2::constant(1)}};
  {
    std::lock_guard lock(mu);
    if (auto it = memo.find(l); it != memo.end()) return it->second;
  }
  Poly2 result;
  if (l.i == 0) {
    result = upoly({l.j, 0}).swapped();
  } else {
    // X-rule at (i-1, j):  U_{i,j} = x U_{i-1,j} - U_{i-2,j+1} - U_{i-1,j-1}.
    result = Poly2::x() * upoly({l.i - 1, l.j});
    if (l.i >= 2) result -= upoly({l.i - 2, l.j + 1});
    if (l.j >= 1) result -= upoly({l.i - 1, l.j - 1});
  }
  std::lock_guard lock(mu);
  return memo.try_emplace(l, std::move(result)).first->second;
}

UBasisVec to_ubasis(Poly2 f) {
  UBasisVec out;
  while (!f.is_zero()) {
    const Monomial lead = f.leading();
    const std::int64_t c = f.coeff(lead);
    out[{lead.x, lead.y}] += c;
    f -= c * upoly({lead.x, lead.y});
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

UBasisVec tensor_with_F(HWLabel l) {
  require_label(l);
  UBasisVec out{{{l.i + 1, l.j}, 1}};
  if (l.i >= 1) out[{l.i - 1, l.j + 1}] += 1;
  if (l.j >= 1) out[{l.i, l.j - 1}] += 1;
  return out;
}

UBasisVec tensor_with_G(HWLabel l) {
  require_label(l);
  UBasisVec out{{{l.i, l.j + 1}, 1}};
  if (l.j >= 1) out[{l.i + 1, l.j - 1}] += 1;
  if (l.i >= 1) out[{l.i - 1, l.j}] += 1;
  return out;
}

namespace {

// Dense vector over labels (k,l) with k + l <= bound.
class DenseVec {
 public:
  explicit DenseVec(std::int64_t bound)
      : n_(bound + 1), data_(static_cast<std::size_t>(n_ * n_), 0) {}

  std::int64_t& at(std::int64_t k, std::int64_t l) { return data_[static_cast<std::size_t>(k * n_ + l)]; }
  std::int64_t at(std::int64_t k, std::int64_t l) const {
    return data_[static_cast<std::size_t>(k * n_ + l)];
  }
  std::int64_t size() const { return n_; }

  void sub(const DenseVec& o) {
    for (std::size_t t = 0; t < data_.size(); ++t) data_[t] -= o.data_[t];
  }

  // Applies the Pieri rule of F (sign = +1 moves) or G to every label.
  DenseVec pieri(bool with_f) const {
    DenseVec r(n_ - 1);
    for (std::int64_t k = 0; k < n_; ++k)
      for (std::int64_t l = 0; k + l < n_; ++l) {
        const std::int64_t c = at(k, l);
        if (c == 0) continue;
        if (with_f) {
          if (k + l + 1 < n_) r.at(k + 1, l) += c;
          if (k >= 1) r.at(k - 1, l + 1) += c;
          if (l >= 1) r.at(k, l - 1) += c;
        } else {
          if (k + l + 1 < n_) r.at(k, l + 1) += c;
          if (l >= 1) r.at(k + 1, l - 1) += c;
          if (k >= 1) r.at(k - 1, l) += c;
        }
      }
    return r;
  }

  UBasisVec sparse() const {
    UBasisVec out;
    for (std::int64_t k = 0; k < n_; ++k)
      for (std::int64_t l = 0; k + l < n_; ++l)
        if (at(k, l) != 0) out[{k, l}] = at(k, l);
    return out;
  }

 private:
  std::int64_t n_;
  std::vector<std::int64_t> data_;
};

}  // namespace

std::map<HWLabel, UBasisVec> tensor_table(HWLabel b, std::int64_t max_degree) {
  require_label(b);
  if (max_degree < 0) throw Error(Errc::InvalidArgument, "max_degree must be non-negative");
  // Every constituent of L(a) (x) L(b) has k + l <= |a| + |b|, so the
  // Pieri moves never leave a box of that size.
  const std::int64_t bound = max_degree + b.i + b.j;
  std::map<HWLabel, DenseVec> dp;
  auto get = [&](std::int64_t i, std::int64_t j) -> const DenseVec* {
    if (i < 0 || j < 0) return nullptr;
    return &dp.at({i, j});
  };
  DenseVec start(bound);
  start.at(b.i, b.j) = 1;
  dp.emplace(HWLabel{0, 0}, std::move(start));
  for (std::int64_t d = 1; d <= max_degree; ++d) {
    for (std::int64_t i = d; i >= 0; --i) {
      const std::int64_t j = d - i;
      DenseVec v(bound);
      if (i >= 1) {
        v = get(i - 1, j)->pieri(true);
        if (auto* t = get(i - 2, j + 1)) v.sub(*t);
        if (auto* t = get(i - 1, j - 1)) v.sub(*t);
      } else {
        // Y-rule at (0, j-1):  T_{0,j} = Y T_{0,j-1} - T_{1,j-2}.
        v = get(0, j - 1)->pieri(false);
        if (auto* t = get(1, j - 2)) v.sub(*t);
      }
      dp.emplace(HWLabel{i, j}, std::move(v));
    }
  }
  std::map<HWLabel, UBasisVec> out;
  for (const auto& [a, v] : dp) out.emplace(a, v.sparse());
  return out;
}

UBasisVec tensor(HWLabel a, HWLabel b) {
  require_label(a);
  require_label(b);
  // Tensor product is symmetric; recurse over the smaller factor.
  if (a.i + a.j > b.i + b.j) std::swap(a, b);
  return tensor_table(b, a.i + a.j).at(a);
}

UBasisVec tensor_via_polynomials(HWLabel a, HWLabel b) {
  return to_ubasis(upoly(a) * upoly(b));
}

std::int64_t dim(HWLabel l) {
  require_label(l);
  return checked_mul(checked_mul(l.i + 1, l.j + 1), l.i + l.j + 2) / 2;
}

std::int64_t kostant_p(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0) throw Error(Errc::InvalidArgument, "kostant_p needs a, b >= 0");
  return std::min(a, b) + 1;
}

std::int64_t verma_mult(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0) throw Error(Errc::InvalidArgument, "verma_mult needs a, b >= 0");
  return std::min(a + 1, b + 1);
}

}  // namespace sl3
