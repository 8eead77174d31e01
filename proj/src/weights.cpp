#include "sl3/weights.hpp"

#include <algorithm>
#include <ostream>

#include "sl3/error.hpp"

namespace sl3 {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::OutsideCoset: return "OutsideCoset";
    case Errc::InvalidVertex: return "InvalidVertex";
    case Errc::EmptyWindow: return "EmptyWindow";
    case Errc::WindowTooSmall: return "WindowTooSmall";
    case Errc::NotSemisimpleCategory: return "NotSemisimpleCategory";
    case Errc::NoKnownMap: return "NoKnownMap";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::Overflow: return "Overflow";
  }
  return "?";
}

std::ostream& operator<<(std::ostream& os, const IntPair& v) {
  return os << '(' << v.p << ',' << v.q << ')';
}

std::ostream& operator<<(std::ostream& os, const Weight& w) {
  return os << to_string(w.cls) << w.off;
}

std::string_view to_string(CosetClass c) noexcept {
  switch (c) {
    case CosetClass::Integral: return "integral";
    case CosetClass::SWall: return "s";
    case CosetClass::RWall: return "r";
    case CosetClass::W0Wall: return "w0";
    case CosetClass::ThirdOne: return "third1";
    case CosetClass::ThirdTwo: return "third2";
    case CosetClass::Generic: return "generic";
  }
  return "?";
}

std::optional<CosetClass> parse_coset_class(std::string_view s) noexcept {
  for (auto c : kAllCosetClasses)
    if (to_string(c) == s) return c;
  return std::nullopt;
}

std::string_view to_string(WeylElem w) noexcept {
  switch (w) {
    case WeylElem::E: return "e";
    case WeylElem::S: return "s";
    case WeylElem::R: return "r";
    case WeylElem::SR: return "sr";
    case WeylElem::RS: return "rs";
    case WeylElem::W0: return "w0";
  }
  return "?";
}

namespace {

using Mat = std::array<std::array<std::int64_t, 2>, 2>;

// Linear action on (l(h1), l(h2)); rows give the new coordinates.
//   s(p,q) = (-p, p+q)      r(p,q) = (p+q, -q)
//   sr = s after r          rs = r after s          w0 = srs = rsr
constexpr std::array<Mat, 6> kMatrices{{
    {{{1, 0}, {0, 1}}},     // e
    {{{-1, 0}, {1, 1}}},    // s
    {{{1, 1}, {0, -1}}},    // r
    {{{-1, -1}, {1, 0}}},   // sr
    {{{0, 1}, {-1, -1}}},   // rs
    {{{0, -1}, {-1, 0}}},   // w0
}};

constexpr Mat mul(const Mat& a, const Mat& b) {
  Mat c{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return c;
}

constexpr IntPair apply(const Mat& m, IntPair v) {
  return {m[0][0] * v.p + m[0][1] * v.q, m[1][0] * v.p + m[1][1] * v.q};
}

constexpr std::size_t idx(WeylElem w) { return static_cast<std::size_t>(w); }

// Offset shift of the dot action inside each coset:
//   w.(b + x) - b = w(x) + (w(rho) - rho) + (w(b) - b),
// where the last term is an integral vector whenever w preserves the coset.
IntPair coset_shift(CosetClass c, WeylElem w) {
  const IntPair rho_shift = apply(kMatrices[idx(w)], kRho) - kRho;
  switch (c) {
    case CosetClass::ThirdOne:
    case CosetClass::ThirdTwo: {
      // b = (t,t): sr(b) - b = (-3t, 0), rs(b) - b = (0, -3t).
      const std::int64_t three_t = c == CosetClass::ThirdOne ? 1 : 2;
      if (w == WeylElem::SR) return rho_shift + IntPair{-three_t, 0};
      if (w == WeylElem::RS) return rho_shift + IntPair{0, -three_t};
      return rho_shift;
    }
    default:
      // The wall cosets' base points are fixed by their allowed reflection.
      return rho_shift;
  }
}

}  // namespace

WeylElem compose(WeylElem x, WeylElem y) noexcept {
  const Mat m = mul(kMatrices[idx(x)], kMatrices[idx(y)]);
  for (auto w : kWeylGroup)
    if (kMatrices[idx(w)] == m) return w;
  return WeylElem::E;  // unreachable: the matrices form a group
}

WeylElem inverse(WeylElem w) noexcept {
  switch (w) {
    case WeylElem::SR: return WeylElem::RS;
    case WeylElem::RS: return WeylElem::SR;
    default: return w;
  }
}

std::array<std::array<std::int64_t, 2>, 2> linear_matrix(WeylElem w) noexcept {
  return kMatrices[idx(w)];
}

bool is_allowed(WeylElem w, CosetClass c) noexcept {
  if (w == WeylElem::E) return true;
  switch (c) {
    case CosetClass::Integral: return true;
    case CosetClass::SWall: return w == WeylElem::S;
    case CosetClass::RWall: return w == WeylElem::R;
    case CosetClass::W0Wall: return w == WeylElem::W0;
    case CosetClass::ThirdOne:
    case CosetClass::ThirdTwo: return w == WeylElem::SR || w == WeylElem::RS;
    case CosetClass::Generic: return false;
  }
  return false;
}

std::vector<WeylElem> allowed_elements(CosetClass c) {
  std::vector<WeylElem> out;
  for (auto w : kWeylGroup)
    if (is_allowed(w, c)) out.push_back(w);
  return out;
}

Weight dot(WeylElem w, const Weight& lambda) {
  if (!is_allowed(w, lambda.cls))
    throw Error(Errc::OutsideCoset, std::string(to_string(w)) + " does not preserve the " +
                                        std::string(to_string(lambda.cls)) + " coset");
  return {lambda.cls, apply(kMatrices[idx(w)], lambda.off) + coset_shift(lambda.cls, w)};
}

std::vector<Weight> dot_orbit(const Weight& lambda) {
  std::vector<Weight> orbit;
  for (auto w : allowed_elements(lambda.cls)) orbit.push_back(dot(w, lambda));
  std::sort(orbit.begin(), orbit.end());
  orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
  return orbit;
}

std::vector<WeylElem> stabilizer(const Weight& lambda) {
  std::vector<WeylElem> out;
  for (auto w : allowed_elements(lambda.cls))
    if (dot(w, lambda) == lambda) out.push_back(w);
  return out;
}

bool is_singular(const Weight& lambda) noexcept {
  const auto [p, q] = lambda.off;
  switch (lambda.cls) {
    case CosetClass::Integral: return p == -1 || q == -1 || p + q == -2;
    case CosetClass::SWall: return p == -1;
    case CosetClass::RWall: return q == -1;
    case CosetClass::W0Wall: return p + q == -2;
    default: return false;
  }
}

Region region(const Weight& lambda) noexcept {
  const auto [p, q] = lambda.off;
  switch (lambda.cls) {
    case CosetClass::Integral:
      if (p >= 0) return q >= 0 ? Region::Top : Region::LowerMiddle;
      return q >= 0 ? Region::UpperMiddle : Region::Bottom;
    case CosetClass::SWall: return p >= 0 ? Region::X1 : Region::X2;
    case CosetClass::RWall: return q >= 0 ? Region::X3 : Region::X4;
    case CosetClass::W0Wall: return p + q >= 0 ? Region::X5 : Region::X6;
    case CosetClass::ThirdOne:
    case CosetClass::ThirdTwo: return Region::ThirdCell;
    case CosetClass::Generic: return Region::GenericCell;
  }
  return Region::GenericCell;
}

std::string_view to_string(Region r) noexcept {
  switch (r) {
    case Region::Top: return "top";
    case Region::UpperMiddle: return "upper-middle";
    case Region::LowerMiddle: return "lower-middle";
    case Region::Bottom: return "bottom";
    case Region::X1: return "X1";
    case Region::X2: return "X2";
    case Region::X3: return "X3";
    case Region::X4: return "X4";
    case Region::X5: return "X5";
    case Region::X6: return "X6";
    case Region::GenericCell: return "generic";
    case Region::ThirdCell: return "third";
  }
  return "?";
}

IntPair third_canonical(CosetClass c, IntPair off) {
  if (c != CosetClass::ThirdOne && c != CosetClass::ThirdTwo)
    throw Error(Errc::OutsideCoset, "canonical orbit representatives exist only on third cosets");
  const Weight w{c, off};
  return std::min({off, dot(WeylElem::SR, w).off, dot(WeylElem::RS, w).off});
}

void to_json(nlohmann::json& j, const Weight& w) {
  j = nlohmann::json{{"class", std::string(to_string(w.cls))}, {"off", {w.off.p, w.off.q}}};
}

void from_json(const nlohmann::json& j, Weight& w) {
  const auto tag = j.at("class").get<std::string>();
  const auto cls = parse_coset_class(tag);
  if (!cls) throw Error(Errc::InvalidArgument, "unknown coset class '" + tag + "'");
  const auto& off = j.at("off");
  if (!off.is_array() || off.size() != 2)
    throw Error(Errc::InvalidArgument, "weight offset must be a two-element array");
  w = Weight{*cls, {off[0].get<std::int64_t>(), off[1].get<std::int64_t>()}};
}

}  // namespace sl3
