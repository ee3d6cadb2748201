#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "elsim/constitutive.hpp"
#include "elsim/diagnostics.hpp"
#include "elsim/linear_solver.hpp"
#include "elsim/state.hpp"

namespace elsim {

/// Outer fixed-point iteration settings.  Each sweep solves the linearized
/// system over the whole time horizon with the previous sweep's (u, d) as
/// frozen inputs.
struct PicardConfig {
    TimeGrid time{1.0, 10};
    double psi_tol = 1e-10;
    int max_sweeps = 50;
    int divergence_patience = 3;
    SolverConfig solver;
    double cfl_warn = 0.5;
    double cfl_error = 2.0;
    bool collect_norms = true;   // per-sweep norm bundles in the report

    void validate() const;
};

/// Initial data (rho0, u0, d0) with the boundary constraints checked on
/// construction: rho0 >= 0, u0 = 0 on the boundary and |d0| = 1 at boundary
/// nodes, both within 1e-12.  g is the optional compatibility source.
struct InitialData {
    InitialData(ScalarField rho0_in, VectorField u0_in, DirectorField d0_in,
                std::optional<VectorField> g_in = {});

    ScalarField rho0;
    VectorField u0;
    DirectorField d0;
    std::optional<VectorField> g;
};

struct SweepRecord {
    int sweep = 0;
    bool has_psi = false;
    double psi_sup = 0.0;       // sup-in-time distance to the previous sweep
    bool has_ratio = false;
    double ratio = 0.0;         // psi_sup / previous psi_sup
    long solver_iterations = 0;
    double cfl_max = 0.0;
    bool cfl_warning = false;
    double wall_seconds = 0.0;
};

/// Append-only record of one outer solve.
struct PicardReport {
    std::vector<SweepRecord> sweeps;
    std::vector<NormBundle> sweep_norm_sup;  // parallel to sweeps (may be empty)
    std::string termination;                 // converged | max_sweeps | diverged
    double delta = 0.0;                      // regularization used throughout
    double psi_cumulative = 0.0;             // sum of recorded psi_sup values

    /// One CSV row per sweep: sweep, psi_sup, ratio, solver_iterations,
    /// cfl_max and (optionally) wall_seconds.  Undefined cells are empty.
    /// The deterministic pipeline writes this without the wall-time column.
    std::string csv(bool include_wall_time = true) const;

    int converged_sweeps() const { return int(sweeps.size()); }
};

class picard_divergence_error : public std::runtime_error {
public:
    picard_divergence_error(const std::string& msg, PicardReport rep)
        : std::runtime_error(msg), report(std::move(rep)) {}
    PicardReport report;
};

class picard_nonconvergence_error : public std::runtime_error {
public:
    picard_nonconvergence_error(const std::string& msg, PicardReport rep)
        : std::runtime_error(msg), report(std::move(rep)) {}
    PicardReport report;
};

struct LinearizedStats {
    long solver_iterations = 0;
    double cfl_max = 0.0;
    bool cfl_warning = false;
};

/// Optional manufactured sources for the linearized sweep, sampled at t_n.
struct LinearizedForcing {
    std::function<DirectorField(double)> director;
    std::function<VectorField(double)> momentum;
};

/// Squared metric between two states on the same grid:
///   ||rho_a - rho_b||_2^2 + ||d_a - d_b||_2^2 + ||grad(d_a - d_b)||_2^2
///   + weighted_l2(rho_a, u_a - u_b)^2
/// (the first argument's density weights the velocity term).
double psi_distance(const FluidState& a, const FluidState& b);

/// Seed iterates: velocity = heat flow of u0 (unit diffusivity, zero
/// Dirichlet), director frozen at d0 for all levels.
std::pair<std::vector<VectorField>, std::vector<DirectorField>>
initial_iterates(const InitialData& data, const TimeGrid& tg,
                 const SolverConfig& solver = {});

/// One sweep of the linearized system with frozen inputs (v, n):
/// density by delta-shifted transport along v, director by director_step,
/// velocity by momentum_step, in that order, all couplings at t_n.
/// Preconditions: v and n have steps+1 levels, v(0) = u0 and n(0) = d0
/// within 1e-12, and n carries d0 on the boundary at every level.
Trajectory solve_linearized(const InitialData& data,
                            const std::vector<VectorField>& v,
                            const std::vector<DirectorField>& n,
                            const ModelParams& params, const PicardConfig& cfg,
                            LinearizedStats* stats = nullptr,
                            const LinearizedForcing* forcing = nullptr);

/// Full outer iteration.  Stops once the sup-in-time psi distance between
/// consecutive sweeps drops below psi_tol (earliest after sweep 2).  Throws
/// picard_divergence_error after divergence_patience consecutive
/// non-contracting sweeps and picard_nonconvergence_error when max_sweeps is
/// exhausted; both carry the report.
std::pair<Trajectory, PicardReport> picard_solve(const InitialData& data,
                                                 const ModelParams& params,
                                                 const PicardConfig& cfg);

/// Discrete residuals of the coupled nonlinear system along a trajectory,
/// using central time differences at interior levels and the same spatial
/// stencils as the solvers; one L2 norm per equation per interior level.
/// Boundary rows are excluded (they hold Dirichlet identities).
struct ResidualSeries {
    std::vector<double> time;
    std::vector<double> continuity;
    std::vector<double> momentum;
    std::vector<double> director;
};

ResidualSeries nonlinear_residual(const Trajectory& traj, const ModelParams& params);

}  // namespace elsim
