#pragma once

#include <vector>

#include "elsim/constitutive.hpp"
#include "elsim/field.hpp"
#include "elsim/grid.hpp"
#include "elsim/linear_solver.hpp"

namespace elsim {

/// Advective CFL number dt * max|v| / min spacing.  The implicit steps stay
/// stable well past 1, but the explicit advection terms degrade; callers
/// warn above cfl_warn and abort above cfl_error.
double advective_cfl(const VectorField& v, double dt);

/// Backward-Euler heat flow phi_t = diffusivity * lap phi with zero
/// Dirichlet data, returning all steps+1 levels including the initial one.
/// u0 must vanish on the boundary (within 1e-12) so the returned levels all
/// satisfy the boundary condition.  Used to seed the outer iteration (unit
/// diffusivity by default).
std::vector<VectorField> heat_flow(const VectorField& u0, const TimeGrid& tg,
                                   const SolverConfig& solver = {},
                                   double diffusivity = 1.0,
                                   long* iterations = nullptr);

/// One implicit-in-diffusion director step:
///   (I - nu dt lap) d_{n+1} = d_n - dt (v . grad) d_n
///                             - dt nu gl_linearized(n_mid, d_n, m, sigma)
///                             [+ dt * forcing]
/// with Dirichlet values taken from the boundary entries of d_n (which carry
/// the initial director).  Explicit couplings are evaluated at t_n.
DirectorField director_step(const DirectorField& d_n, const VectorField& v_n,
                            const DirectorField& n_mid, const ModelParams& params,
                            double dt, const SolverConfig& solver = {},
                            const DirectorField* forcing = nullptr,
                            SolverStats* stats = nullptr);

/// One implicit-in-diffusion momentum step:
///   (rho_{n+1}/dt) u_{n+1} - mu lap u_{n+1} =
///     (rho_{n+1}/dt) u_n - rho_{n+1} (v . grad) u_n - grad p(rho_{n+1})
///     + elastic_force(d_n) [+ forcing]
/// with zero Dirichlet data.  rho_{n+1} must stay above rho_floor > 0; the
/// floor is a precondition check only and never alters values, so raising it
/// below min(rho) cannot change the output.
VectorField momentum_step(const ScalarField& rho_np1, const VectorField& u_n,
                          const VectorField& v_n, const DirectorField& d_n,
                          const ModelParams& params, double dt, double rho_floor,
                          const SolverConfig& solver = {},
                          const VectorField* forcing = nullptr,
                          SolverStats* stats = nullptr);

/// Initial velocity u0 from the compatibility relation: solves
///   mu lap u = (rho0 + delta)^{1/2} g + grad p(rho0 + delta)
///              + lambda div(ericksen_stress(d0))
/// with zero Dirichlet data, one Poisson solve per component.
VectorField solve_initial_velocity(const VectorField& g, const ScalarField& rho0,
                                   const DirectorField& d0, const ModelParams& params,
                                   const SolverConfig& solver = {});

/// Compatibility source g = rho0^{-1/2} (mu lap u0
///   - lambda div(ericksen_stress(d0)) - grad p(rho0)), defined only for
/// rho0 >= rho_min > 0; a vacuum node raises std::invalid_argument naming
/// the node.
VectorField compute_g(const VectorField& u0, const ScalarField& rho0,
                      const DirectorField& d0, const ModelParams& params,
                      double rho_min = 1e-8);

}  // namespace elsim
