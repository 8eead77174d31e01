#include "sl3/category.hpp"

#include <algorithm>

#include "sl3/weights.hpp"

namespace sl3 {

std::string_view to_string(CategoryId c) noexcept {
  switch (c) {
    case CategoryId::Regular: return "regular";
    case CategoryId::N1: return "n1";
    case CategoryId::N2: return "n2";
    case CategoryId::N3: return "n3";
    case CategoryId::M1: return "m1";
    case CategoryId::M2: return "m2";
    case CategoryId::M3: return "m3";
    case CategoryId::M4: return "m4";
    case CategoryId::M5: return "m5";
    case CategoryId::M6: return "m6";
    case CategoryId::GenericK: return "generic";
    case CategoryId::Whittaker1: return "whittaker1";
    case CategoryId::Whittaker2: return "whittaker2";
  }
  return "?";
}

std::optional<CategoryId> parse_category(std::string_view s) noexcept {
  for (auto c : kAllCategories)
    if (to_string(c) == s) return c;
  return std::nullopt;
}

IsoClass iso_class(CategoryId c) noexcept {
  switch (c) {
    case CategoryId::Regular: return IsoClass::Regular;
    case CategoryId::N1: return IsoClass::N1;
    case CategoryId::N2: return IsoClass::N2;
    case CategoryId::N3: return IsoClass::N3;
    case CategoryId::M1:
    case CategoryId::M3:
    case CategoryId::M5: return IsoClass::MOdd;
    case CategoryId::M2:
    case CategoryId::M4:
    case CategoryId::M6: return IsoClass::MEven;
    case CategoryId::GenericK: return IsoClass::Generic;
    case CategoryId::Whittaker1:
    case CategoryId::Whittaker2: return IsoClass::Whittaker;
  }
  return IsoClass::Generic;
}

std::string_view to_string(IsoClass c) noexcept {
  switch (c) {
    case IsoClass::Regular: return "regular";
    case IsoClass::N1: return "n1";
    case IsoClass::N2: return "n2";
    case IsoClass::N3: return "n3";
    case IsoClass::MOdd: return "m-odd";
    case IsoClass::MEven: return "m-even";
    case IsoClass::Generic: return "generic";
    case IsoClass::Whittaker: return "whittaker";
  }
  return "?";
}

bool is_whittaker(CategoryId c) noexcept {
  return c == CategoryId::Whittaker1 || c == CategoryId::Whittaker2;
}

bool is_semisimple(CategoryId c) noexcept {
  switch (c) {
    case CategoryId::Regular:
    case CategoryId::M1:
    case CategoryId::M3:
    case CategoryId::M5:
    case CategoryId::GenericK:
    case CategoryId::Whittaker1:
    case CategoryId::Whittaker2: return true;
    default: return false;
  }
}

std::vector<CategoryId> category_of_simple(const Weight& lambda, bool whittaker) {
  using C = CategoryId;
  const auto [p, q] = lambda.off;
  const bool singular = is_singular(lambda);
  switch (region(lambda)) {
    case Region::Top: return {C::Regular};
    case Region::UpperMiddle: return singular ? std::vector{C::N1} : std::vector{C::N1, C::Regular};
    case Region::LowerMiddle: return singular ? std::vector{C::N2} : std::vector{C::N2, C::Regular};
    case Region::Bottom:
      if (p == -1 && q == -1) return {C::N3};
      if (q == -1) return {C::N3, C::N1};
      if (p == -1) return {C::N3, C::N2};
      return {C::N3, C::N2, C::N1, C::Regular};
    case Region::X1: return {C::M1};
    case Region::X2: return p == -1 ? std::vector{C::M2} : std::vector{C::M2, C::M1};
    case Region::X3: return {C::M3};
    case Region::X4: return q == -1 ? std::vector{C::M4} : std::vector{C::M4, C::M3};
    case Region::X5: return {C::M5};
    case Region::X6: return p + q == -1 ? std::vector{C::M6} : std::vector{C::M6, C::M5};
    case Region::ThirdCell:
      if (!whittaker) return {C::GenericK};
      return {lambda.cls == CosetClass::ThirdOne ? C::Whittaker1 : C::Whittaker2};
    case Region::GenericCell: return {C::GenericK};
  }
  return {};
}

}  // namespace sl3
