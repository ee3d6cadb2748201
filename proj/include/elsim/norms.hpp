#pragma once

#include <limits>

#include "elsim/field.hpp"

namespace elsim {

// Discrete norms built on trapezoidal quadrature: the quadrature weight of a
// node is h^dim times the product of per-axis trapezoid factors (1/2 at axis
// ends, 1 inside).  The pointwise magnitude of a multi-component field is the
// Euclidean norm across components.  Derivative norms use the same stencils
// as the difference operators.

inline constexpr double kInfNorm = std::numeric_limits<double>::infinity();

/// L^q norm, q >= 1 or kInfNorm (max norm).  q < 1 raises
/// std::invalid_argument.
double norm_lq(const Field& f, double q);

/// W^{1,q}: (||f||_q^q + sum_axis ||partial f||_q^q)^(1/q).
double norm_w1q(const Field& f, double q);

/// Sobolev norms with difference-quotient derivatives up to order 2 / 3,
/// combined by summed squares.
double norm_h1(const Field& f);
double norm_h2(const Field& f);
double norm_h3(const Field& f);

/// (sum_nodes quad_weight * rho * |w|^2)^(1/2).  Any negative rho entry
/// raises std::invalid_argument.  With rho identically 1 this equals
/// norm_lq(w, 2) bitwise.
double weighted_l2(const ScalarField& rho, const Field& w);

}  // namespace elsim
