#pragma once

#include "elsim/errors.hpp"
#include "elsim/field.hpp"

namespace elsim {

/// Implicit operator A x = mass .* x - diffusion * lap x with Dirichlet
/// identity rows on the boundary.  mass >= 0 per node, diffusion >= 0, and
/// at least one of (min mass, diffusion) strictly positive, which keeps the
/// interior block symmetric positive definite.
struct LinearOperatorSpec {
    ScalarField mass;
    double diffusion;
    Field dirichlet;   // boundary values per solution component

    LinearOperatorSpec(ScalarField mass_field, double diffusion_coeff, Field dirichlet_values);
};

struct SolverConfig {
    double rel_tol = 1e-10;
    int max_iterations = 0;        // 0 means 10 * node count
    int stagnation_window = 200;   // iterations without sufficient progress
    double stagnation_factor = 0.999;  // required residual shrink per window

    bool operator==(const SolverConfig&) const = default;
};

struct SolverStats {
    long iterations = 0;
    double final_residual = 0.0;
    std::vector<double> residual_history;
};

/// Conjugate-gradient solve of A x = rhs, component by component.  Boundary
/// rows are satisfied exactly by assignment; on return the full-system
/// residual obeys ||A x - rhs||_2 <= rel_tol * ||rhs||_2.  Throws
/// solver_error (with residual history) on non-convergence or stagnation.
/// initial_guess, when given, seeds the iteration (boundary rows are
/// overwritten); a zero initial residual returns the guess unchanged.
Field spd_solve(const LinearOperatorSpec& op, const Field& rhs,
                const SolverConfig& cfg = {}, SolverStats* stats = nullptr,
                const Field* initial_guess = nullptr);

}  // namespace elsim
