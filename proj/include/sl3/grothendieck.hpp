#pragma once

// The Grothendieck ring of finite-dimensional sl3-modules, realized as Z[x,y]
// with x = [L((1,0))] and y = [L((0,1))]. The classes of simples form the
// basis U_{i,j}, defined by U_{0,0} = 1 and the Pieri-type recursions
//   x U_{i,j} = U_{i+1,j} + U_{i-1,j+1} + U_{i,j-1},
//   y U_{i,j} = U_{i,j+1} + U_{i+1,j-1} + U_{i-1,j},
// with U_{i,j} = 0 outside the dominant cone.

#include <compare>
#include <cstdint>
#include <map>
#include <ostream>

namespace sl3 {

struct Monomial {
  std::int64_t x = 0;  // exponent of x
  std::int64_t y = 0;  // exponent of y

  friend constexpr auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Monomial order used for basis peeling: total degree, then larger x-exponent.
bool monomial_less(const Monomial& a, const Monomial& b) noexcept;

/// Sparse bivariate integer polynomial; zero coefficients are never stored.
class Poly2 {
 public:
  using Terms = std::map<Monomial, std::int64_t>;

  Poly2() = default;
  static Poly2 constant(std::int64_t c);
  static Poly2 x();
  static Poly2 y();
  static Poly2 monomial(Monomial m, std::int64_t c = 1);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::int64_t coeff(Monomial m) const noexcept;

  /// Largest monomial under monomial_less. Precondition: not zero.
  Monomial leading() const;

  /// Adds c * x^m.x * y^m.y.
  void add_term(Monomial m, std::int64_t c);

  Poly2& operator+=(const Poly2& o);
  Poly2& operator-=(const Poly2& o);
  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
  friend Poly2 operator*(const Poly2& a, const Poly2& b);
  friend Poly2 operator*(std::int64_t k, const Poly2& a);
  friend bool operator==(const Poly2&, const Poly2&) = default;

  std::int64_t eval(std::int64_t x, std::int64_t y) const;

  /// p(x,y) -> p(y,x).
  Poly2 swapped() const;

 private:
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const Poly2& p);

/// Highest weight (i,j) of the simple module L((i,j)); i, j >= 0.
struct HWLabel {
  std::int64_t i = 0;
  std::int64_t j = 0;

  friend constexpr auto operator<=>(const HWLabel&, const HWLabel&) = default;
};

std::ostream& operator<<(std::ostream& os, const HWLabel& l);

/// Integer combination of classes [L((i,j))].
using UBasisVec = std::map<HWLabel, std::int64_t>;

Poly2 upoly(HWLabel l);
UBasisVec to_ubasis(Poly2 f);

/// F (x) L(l) and G (x) L(l): the three Pieri neighbours, dropping labels
/// with a negative entry.
UBasisVec tensor_with_F(HWLabel l);
UBasisVec tensor_with_G(HWLabel l);

/// Multiplicities of L((k,l)) in L(a) (x) L(b).
UBasisVec tensor(HWLabel a, HWLabel b);

/// tensor(a, b) for every a with a.i + a.j <= max_degree, computed together.
std::map<HWLabel, UBasisVec> tensor_table(HWLabel b, std::int64_t max_degree);

/// Same multiplicities through polynomial multiplication and basis peeling.
UBasisVec tensor_via_polynomials(HWLabel a, HWLabel b);

/// (i+1)(j+1)(i+j+2)/2.
std::int64_t dim(HWLabel l);

/// Number of ways to write a*alpha + b*beta with alpha, beta, alpha+beta.
std::int64_t kostant_p(std::int64_t a, std::int64_t b);

/// dim of the weight space nu - a*alpha - b*beta of a Verma module Delta(nu).
std::int64_t verma_mult(std::int64_t a, std::int64_t b);

}  // namespace sl3
