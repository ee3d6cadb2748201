#pragma once

#include <array>
#include <span>
#include <vector>

#include "elsim/field.hpp"
#include "elsim/grid.hpp"

namespace elsim {

/// Velocity data over one time slab [t_n, t_n + dt], linear in time between
/// the two stored fields.  Both fields must vanish on the boundary (within
/// 1e-12); divergences are precomputed with the central/one-sided stencils.
struct VelocitySlab {
    VelocitySlab(VectorField v_begin, VectorField v_end, double dt);

    VectorField v_begin;
    VectorField v_end;
    double dt;
    ScalarField div_begin;
    ScalarField div_end;

    /// Velocity at relative time s in [0, dt] at a point (multilinear in
    /// space, linear in time).
    std::array<double, 2> velocity(double s, std::array<double, 2> p) const;
};

/// Foot of the characteristic through node position x at the slab end,
/// traced backward over the whole slab with one explicit midpoint step.
/// Both the midpoint and the foot are clamped to the closed domain.
std::array<double, 2> trace_characteristic(const VelocitySlab& slab,
                                           std::array<double, 2> x);

/// One conservative semi-Lagrangian step:
///   rho_{n+1}(x) = rho_n(foot) * exp(-I),
/// with I the trapezoid approximation of the divergence integral along the
/// characteristic (div at slab start interpolated at the foot, div at slab
/// end taken at the node).  Nonnegative input stays nonnegative; there is no
/// clipping of any kind.
ScalarField transport_step(const ScalarField& rho_n, const VelocitySlab& slab);

struct TransportSolution {
    std::vector<ScalarField> rho;        // steps + 1 fields
    std::vector<double> max_abs_div;     // max |div v| per time level
    std::vector<double> lower_bound;     // certified lower bound per level
};

/// March rho through the whole velocity trajectory (steps + 1 fields).
/// Each level k carries the certified bound
///   rho_k >= min(rho_0) * exp(-sum_{n<=k} dt * max|div v_n|) - 1e-12,
/// which is asserted after every step (std::logic_error on violation: the
/// scheme's positivity structure would be broken).
TransportSolution solve_transport(const ScalarField& rho0,
                                  std::span<const VectorField> v,
                                  const TimeGrid& tg);

}  // namespace elsim
