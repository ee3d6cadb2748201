#pragma once

#include <array>
#include <vector>

#include "elsim/field.hpp"

namespace elsim {

// Finite-difference operators on uniform grids.  Interior nodes use standard
// second-order central stencils; boundary nodes use one-sided second-order
// stencils (no ghost nodes).  All operators are linear and exact on affine
// fields at every node; the Laplacian is exact on quadratics as well.

/// Per-component derivative along one axis; same component count as f.
Field partial(const Field& f, int axis);

/// Gradient of every component.  Output component index = c*dim + axis.
/// For a scalar field this is the usual gradient with dim components.
Field gradient(const Field& f);

/// Divergence of a velocity field (components == grid dim).
ScalarField divergence(const VectorField& v);

/// Componentwise Laplacian: 3-point (1-D) / 5-point (2-D) stencil at
/// interior nodes, one-sided 4-point second-derivative stencil at boundary
/// nodes.
Field laplacian(const Field& f);

/// Multilinear interpolation of all components at a point of the closed
/// domain.  Points outside the closed domain (beyond a 1e-12 relative slack)
/// raise std::domain_error; the slack is clamped away before weights are
/// formed, so the result is always a convex combination of node values.
std::vector<double> interpolate(const Field& f, std::array<double, 2> p);

/// Single-component fast path used by the transport loops.
double interpolate_component(const Field& f, int c, std::array<double, 2> p);

}  // namespace elsim
