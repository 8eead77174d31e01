#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace sl3 {

/// The thirteen concrete module-category graph families.
enum class CategoryId : std::uint8_t {
  Regular,
  N1,
  N2,
  N3,
  M1,
  M2,
  M3,
  M4,
  M5,
  M6,
  GenericK,
  Whittaker1,
  Whittaker2,
};

inline constexpr std::array<CategoryId, 13> kAllCategories{
    CategoryId::Regular, CategoryId::N1, CategoryId::N2,       CategoryId::N3,        CategoryId::M1,
    CategoryId::M2,      CategoryId::M3, CategoryId::M4,       CategoryId::M5,        CategoryId::M6,
    CategoryId::GenericK, CategoryId::Whittaker1, CategoryId::Whittaker2};

/// Lower-case CLI names: regular, n1, ..., m6, generic, whittaker1, whittaker2.
std::string_view to_string(CategoryId c) noexcept;
std::optional<CategoryId> parse_category(std::string_view s) noexcept;

/// The eight isomorphism classes of graphs.
enum class IsoClass : std::uint8_t { Regular, N1, N2, N3, MOdd, MEven, Generic, Whittaker };

IsoClass iso_class(CategoryId c) noexcept;
std::string_view to_string(IsoClass c) noexcept;

bool is_whittaker(CategoryId c) noexcept;

/// Categories whose G-graph is the transpose of the F-graph.
bool is_semisimple(CategoryId c) noexcept;

}  // namespace sl3
