#pragma once

// Exact invariant checks on windows of the action graphs. Every check looks
// only at vertices whose relevant neighbourhood lies inside the window, so a
// truncated boundary can never produce a spurious failure.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sl3/category.hpp"
#include "sl3/graphs.hpp"
#include "sl3/grothendieck.hpp"

namespace sl3 {

struct CheckReport {
  std::string name;
  std::string category;
  Box window;
  bool pass = true;
  std::vector<Vertex> counterexamples;
  std::string detail;
};

nlohmann::ordered_json to_json(const CheckReport& r);

/// 3 pf(u) = sum of mult * pf(target) over the out-edges of every vertex whose
/// out-edges (by the category's rules) all land in the window.
CheckReport check_pf(const ActionGraph& g);
CheckReport check_pf(CategoryId cat, FunctorTag functor, const Box& window);

/// F-then-G and G-then-F path counts agree from every depth-`depth` interior
/// vertex. Throws WindowTooSmall if that interior is empty.
CheckReport check_commute(const ActionGraph& f, const ActionGraph& g, int depth = 2);
CheckReport check_commute(CategoryId cat, const Box& window, int depth = 2);

/// G-out-edges equal reversed F-edges at every depth-1 interior vertex. The
/// graph overload compares whatever it is given; the category overload throws
/// NotSemisimpleCategory where the identity is not expected.
CheckReport check_transpose(const ActionGraph& f, const ActionGraph& g);
CheckReport check_transpose(CategoryId cat, const Box& window);

/// Every vertex of the window shrunk by `margin` reaches every other one by a
/// directed path inside the window.
CheckReport check_strong_connectivity(const ActionGraph& g, std::int64_t margin);
CheckReport check_strong_connectivity(CategoryId cat, FunctorTag functor, const Box& window,
                                      std::int64_t margin);

/// Linear map carrying the vertices and edges of `left` onto those of `right`
/// for the partially integral families. Throws NoKnownMap otherwise.
struct LatticeMap {
  std::int64_t a, b, c, d;  // (p,q) -> (a p + b q, c p + d q)
  Vertex operator()(Vertex v) const { return {a * v.p + b * v.q, c * v.p + d * v.q}; }
};
LatticeMap iso_map(CategoryId left, CategoryId right);
CheckReport check_iso_family(CategoryId left, CategoryId right, const Box& window);

/// The in-multiplicity-3 chains as described for N1 and N2, checked
/// literally on side x side default windows. Throws WindowTooSmall below 20.
CheckReport check_n1_n2_distinct(std::int64_t side);

/// The piecewise dot-action map N1 -> N2 (r on p+q >= -1, s on p+q <= -2).
Vertex n1_to_n2(Vertex v);
/// Checks that n1_to_n2 is a bijection of vertex sets carrying F- and G-edges
/// with multiplicities onto each other.
CheckReport check_n1_n2_isomorphism(std::int64_t side);

/// Rows of U_{i,j}(A_F, A_G) at depth-(i+j) interior vertices are
/// nonnegative and satisfy sum_v M[u][v] pf(v) = dim(label) pf(u).
CheckReport check_theta_positivity(const ActionGraph& f, const ActionGraph& g, HWLabel label);
CheckReport check_theta_positivity(CategoryId cat, HWLabel label, const Box& window);

/// Row of U_{i,j}(A_F, A_G) at u, or nullopt if u is not a window vertex.
/// Exact only when u lies in the depth-(i+j) interior.
std::optional<std::map<Vertex, std::int64_t>> theta_row(const ActionGraph& f, const ActionGraph& g,
                                                        HWLabel label, Vertex u);

/// Whittaker graphs: out-multiplicity 3 at every interior vertex, and every
/// lift of an orbit to the coset maps its three generic edges onto the
/// orbit's edges.
CheckReport check_whittaker_degree(const ActionGraph& g);
CheckReport check_whittaker_covering(CategoryId cat, FunctorTag functor, const Box& window);

}  // namespace sl3
