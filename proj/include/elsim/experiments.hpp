#pragma once

#include <span>
#include <vector>

#include "elsim/picard.hpp"

namespace elsim {

/// Fixed smooth data family used by the scaling experiments:
///   rho0 = alpha + theta * b_rho,  u0 = theta * b_u,  d0 = m + theta * b_d
/// with sin^2-product bumps (b_rho >= 0, b_u and b_d vanish on the
/// boundary, so the boundary constraints hold for every theta >= 0 and
/// alpha >= 0).
InitialData bump_data(const GridSpec& grid, double theta, double alpha,
                      const ModelParams& params);

/// Fixed smooth perturbation triple, scaled by eps and added to base.
/// The density part is nonnegative so rho0 stays admissible.
InitialData perturb_data(const InitialData& base, double eps);

struct ContinuityRow {
    double eps = 0.0;
    double psi0 = 0.0;      // distance between the two initial states
    double psi_sup = 0.0;   // sup over time of the distance between runs
    double d_h1_sup = 0.0;  // sup over time of ||d - d_tilde||_{H^1}
};

struct ContinuityResult {
    std::vector<ContinuityRow> rows;   // positive eps entries, input order
    double slope = 0.0;                // log-log slope of psi_sup vs psi0
    bool has_control = false;
    double control_psi_sup = 0.0;      // eps = 0 entry, when present
};

/// Solves the base data and each eps-perturbation with the same
/// configuration and compares the trajectories levelwise.  eps = 0 entries
/// feed the control field instead of the regression.
ContinuityResult continuity_experiment(const InitialData& base,
                                       std::span<const double> epsilons,
                                       const ModelParams& params,
                                       const PicardConfig& cfg);

struct SmallDataResult {
    Trajectory trajectory;
    PicardReport report;
    std::vector<NormBundle> bundles;   // one per time level
    NormBundle initial;
    NormBundle sup;
    double growth_cap = 0.0;
    bool within_cap = true;            // flagged, never thrown
};

/// Long-horizon run from bump_data(theta, alpha); reports the monitored
/// norms and whether every entry stayed below growth_cap times its initial
/// value (entries starting at zero are compared against an absolute floor).
SmallDataResult smalldata_experiment(double theta, double alpha,
                                     const GridSpec& grid, const ModelParams& params,
                                     const PicardConfig& cfg, double growth_cap = 10.0);

struct DeltaSweepRow {
    double delta = 0.0;
    int sweeps = 0;
    double psi_final = 0.0;
    double rho_min = 0.0;        // smallest density over the trajectory
    double certificate = 0.0;    // certified positivity floor at the horizon
};

/// Repeats the same solve while halving the regularization delta, starting
/// from params.delta.
std::vector<DeltaSweepRow> delta_sweep(const InitialData& data,
                                       const ModelParams& params,
                                       const PicardConfig& cfg, int halvings);

}  // namespace elsim
