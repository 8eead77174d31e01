#pragma once

// Integral Perron-Frobenius eigenvectors of the action graphs, eigenvalue 3,
// and the numbers d(L(mu)) for upper middle weights.

#include <cstdint>

#include "sl3/category.hpp"
#include "sl3/graphs.hpp"

namespace sl3 {

/// Minimal positive integral eigenvector entry at v. Throws InvalidVertex.
std::int64_t pf_value(CategoryId cat, Vertex v);

/// d(L(mu)) for mu with p <= -1, q >= 0.
std::int64_t d_simple(Vertex mu);

/// d(N(mu)): the simple itself when mu is singular, otherwise two copies of
/// L(mu) and one of L(w0.mu).
std::int64_t d_object(Vertex mu);

/// d of the quotient of Delta(nu) by Delta(nu - a*alpha - b*beta); a, b >= 1.
std::int64_t verma_quotient_d(std::int64_t a, std::int64_t b);

}  // namespace sl3
