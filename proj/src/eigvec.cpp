#include "sl3/eigvec.hpp"

#include <algorithm>
#include <sstream>

#include "sl3/error.hpp"
#include "sl3/weights.hpp"

namespace sl3 {

namespace {

void require_upper_middle(Vertex mu) {
  if (mu.p <= -1 && mu.q >= 0) return;
  std::ostringstream os;
  os << mu << " is not an upper middle weight";
  throw Error(Errc::InvalidVertex, os.str());
}

}  // namespace

std::int64_t pf_value(CategoryId cat, Vertex v) {
  if (!in_vertex_set(cat, v)) {
    std::ostringstream os;
    os << v << " is not a vertex of " << to_string(cat);
    throw Error(Errc::InvalidVertex, os.str());
  }
  const auto [p, q] = v;
  switch (cat) {
    case CategoryId::Regular: return (p + 1) * (q + 1) * (p + q + 2) / 2;
    case CategoryId::N1:
      if (p == -1 || p + q == -2) return q + 1;
      if (p + q > -2) return 2 * q + p + 3;
      return q - p;
    case CategoryId::N2:
      if (q == -1 || p + q == -2) return p + 1;
      if (p + q > -2) return 2 * p + q + 3;
      return p - q;
    case CategoryId::N3:
      if (p == -1 && q == -1) return 1;
      if (p == -1 || q == -1) return 3;
      return 6;
    case CategoryId::M1: return p + 1;
    case CategoryId::M2: return p == -1 ? 1 : 2;
    case CategoryId::M3: return q + 1;
    case CategoryId::M4: return q == -1 ? 1 : 2;
    case CategoryId::M5: return p + q + 1;
    case CategoryId::M6: return p + q == -1 ? 1 : 2;
    case CategoryId::GenericK:
    case CategoryId::Whittaker1:
    case CategoryId::Whittaker2: return 1;
  }
  return 1;
}

std::int64_t d_simple(Vertex mu) {
  require_upper_middle(mu);
  const auto [p, q] = mu;
  if (p + q <= -2 || p == -1) return q + 1;
  return p + q + 2;
}

std::int64_t d_object(Vertex mu) {
  require_upper_middle(mu);
  if (is_singular(Weight{CosetClass::Integral, mu})) return d_simple(mu);
  const Vertex partner{-mu.q - 2, -mu.p - 2};
  return 2 * d_simple(mu) + d_simple(partner);
}

std::int64_t verma_quotient_d(std::int64_t a, std::int64_t b) {
  if (a < 1 || b < 1) throw Error(Errc::InvalidArgument, "verma_quotient_d needs a, b >= 1");
  return std::max(a, b);
}

}  // namespace sl3
