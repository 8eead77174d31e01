#pragma once

// Weights of sl3 in a single coset of the integral lattice, and the Weyl
// group acting on them by the shifted (dot) action  w.l = w(l + rho) - rho.
//
// A weight is stored as a coset tag plus an integer offset from the coset's
// formal base point. For the non-integral cosets the base point involves a
// scalar that is never materialized: every predicate we need (wall
// membership, regions, orbits) depends on the offset only.

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sl3/category.hpp"

namespace sl3 {

/// Values (l(h1), l(h2)) of a weight, or of a lattice vector.
struct IntPair {
  std::int64_t p = 0;
  std::int64_t q = 0;

  friend constexpr auto operator<=>(const IntPair&, const IntPair&) = default;
  friend constexpr IntPair operator+(IntPair a, IntPair b) { return {a.p + b.p, a.q + b.q}; }
  friend constexpr IntPair operator-(IntPair a, IntPair b) { return {a.p - b.p, a.q - b.q}; }
  friend constexpr IntPair operator-(IntPair a) { return {-a.p, -a.q}; }
  friend constexpr IntPair operator*(std::int64_t k, IntPair a) { return {k * a.p, k * a.q}; }
};

std::ostream& operator<<(std::ostream& os, const IntPair& v);

constexpr IntPair swap(IntPair v) { return {v.q, v.p}; }

inline constexpr IntPair kAlpha{2, -1};
inline constexpr IntPair kBeta{-1, 2};
inline constexpr IntPair kRho{1, 1};

enum class CosetClass : std::uint8_t {
  Integral,   // 0 + Lambda
  SWall,      // (0,a) + Lambda
  RWall,      // (a,0) + Lambda
  W0Wall,     // (a,-a) + Lambda
  ThirdOne,   // (1/3,1/3) + Lambda
  ThirdTwo,   // (2/3,2/3) + Lambda
  Generic,
};

inline constexpr std::array<CosetClass, 7> kAllCosetClasses{
    CosetClass::Integral, CosetClass::SWall,    CosetClass::RWall,  CosetClass::W0Wall,
    CosetClass::ThirdOne, CosetClass::ThirdTwo, CosetClass::Generic};

/// JSON tags: "integral", "s", "r", "w0", "third1", "third2", "generic".
std::string_view to_string(CosetClass c) noexcept;
std::optional<CosetClass> parse_coset_class(std::string_view s) noexcept;

struct Weight {
  CosetClass cls = CosetClass::Integral;
  IntPair off;

  friend constexpr auto operator<=>(const Weight&, const Weight&) = default;
};

std::ostream& operator<<(std::ostream& os, const Weight& w);

constexpr Weight integral(std::int64_t p, std::int64_t q) { return {CosetClass::Integral, {p, q}}; }

enum class WeylElem : std::uint8_t { E, S, R, SR, RS, W0 };

inline constexpr std::array<WeylElem, 6> kWeylGroup{WeylElem::E,  WeylElem::S,  WeylElem::R,
                                                    WeylElem::SR, WeylElem::RS, WeylElem::W0};

std::string_view to_string(WeylElem w) noexcept;

/// Composition x*y, meaning "apply y first, then x".
WeylElem compose(WeylElem x, WeylElem y) noexcept;
WeylElem inverse(WeylElem w) noexcept;

/// Integer matrix of the linear (unshifted) action on (l(h1), l(h2)).
std::array<std::array<std::int64_t, 2>, 2> linear_matrix(WeylElem w) noexcept;

/// Elements whose dot action preserves the coset of the given class.
std::vector<WeylElem> allowed_elements(CosetClass c);
bool is_allowed(WeylElem w, CosetClass c) noexcept;

/// Dot action. Throws Error{OutsideCoset} when w does not preserve the coset.
Weight dot(WeylElem w, const Weight& lambda);

/// Orbit of lambda under the allowed elements, sorted and deduplicated.
std::vector<Weight> dot_orbit(const Weight& lambda);

bool is_singular(const Weight& lambda) noexcept;
std::vector<WeylElem> stabilizer(const Weight& lambda);

enum class Region : std::uint8_t {
  Top,
  UpperMiddle,
  LowerMiddle,
  Bottom,
  X1,
  X2,
  X3,
  X4,
  X5,
  X6,
  GenericCell,
  ThirdCell,
};

std::string_view to_string(Region r) noexcept;

Region region(const Weight& lambda) noexcept;

/// Canonical (lexicographically least) member of the dot-orbit of an offset
/// in a Third coset. Throws OutsideCoset for any other class.
IntPair third_canonical(CosetClass c, IntPair off);

/// Ordered transitive subquotients of add(C . L(lambda)), bottom first. With
/// `whittaker` set, third-coset weights index Whittaker orbits instead of
/// highest weight simples.
std::vector<CategoryId> category_of_simple(const Weight& lambda, bool whittaker = false);

void to_json(nlohmann::json& j, const Weight& w);
void from_json(const nlohmann::json& j, Weight& w);

}  // namespace sl3

template <>
struct std::hash<sl3::IntPair> {
  std::size_t operator()(const sl3::IntPair& v) const noexcept {
    auto h = static_cast<std::uint64_t>(v.p) * 0x9E3779B97F4A7C15ull;
    h ^= static_cast<std::uint64_t>(v.q) + 0x7F4A7C15ull + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};
