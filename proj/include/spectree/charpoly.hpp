#pragma once

#include <vector>

#include "spectree/graph.hpp"
#include "spectree/polynomial.hpp"

namespace spectree {

// Fraction-free (Bareiss) determinant; exact over Z[z] resp. Z.
IntPoly det_bareiss(std::vector<std::vector<IntPoly>> m);
Int det_bareiss(std::vector<std::vector<Int>> m);

// det(z*W - A) over the interior subgraph, W = original-degree diagonal.
// The empty subgraph yields the constant 1 (0x0 determinant).
IntPoly interior_char_poly(const InteriorSubgraph& sub);

// Characteristic polynomial of the Dirichlet problem: drop the Dirichlet
// pendants, keep original degrees on the diagonal, take the determinant.
// Degree = retained vertex count; leading coefficient = product of the
// retained vertices' original degrees.
IntPoly dirichlet_poly(const Graph& g, const BoundaryConfig& b);

// Exponent of the sine factor in the factorized characteristic function:
// |edges| - p + r. Equals p_pen - 1 for a tree with all pendants Dirichlet.
int sine_exponent(const Graph& g, const BoundaryConfig& b);

} // namespace spectree
