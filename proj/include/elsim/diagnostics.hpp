#pragma once

#include <vector>

#include "elsim/constitutive.hpp"
#include "elsim/state.hpp"

namespace elsim {

/// Energy split of one state: kinetic (1/2) int rho |u|^2, internal
/// int a rho^gamma / (gamma - 1), elastic lambda int (|grad d|^2 / 2 + F(d)).
struct EnergyBreakdown {
    double kinetic = 0.0;
    double internal = 0.0;
    double elastic = 0.0;
    double total = 0.0;
};

EnergyBreakdown energy(const FluidState& s, const ModelParams& params);

/// mu ||grad u||_2^2 + lambda nu ||lap d - gl_force(d)||_2^2.
double dissipation(const FluidState& s, const ModelParams& params);

/// The norms the analysis keeps bounded, one bundle per time level.  Time
/// derivatives are forward difference quotients (backward at the last
/// level).
struct NormBundle {
    double rho_w16 = 0.0;          // ||rho||_{W^{1,6}}
    double rho_t_l6 = 0.0;         // ||rho_t||_{L^6}
    double u_h1 = 0.0;             // ||u||_{H^1}
    double u_grad2_l2 = 0.0;       // ||second derivatives of u||_{L^2}
    double sqrt_rho_u_t_l2 = 0.0;  // ||rho^{1/2} u_t||_{L^2}
    double d_h1 = 0.0;             // ||d||_{H^1}
    double d_t_h1 = 0.0;           // ||d_t||_{H^1}
    double d_grad2_l2 = 0.0;       // ||second derivatives of d||_{L^2}
    double grad_d_h2 = 0.0;        // ||grad d||_{H^2}
};

std::vector<NormBundle> monitor_norms(const Trajectory& traj);

/// Entrywise maximum over a bundle series.
NormBundle norm_sup(const std::vector<NormBundle>& series);

/// Positive part of E^{n+1} - E^n + dt * (D^n + D^{n+1})/2 per step: zero
/// for an exactly dissipative step, positive where the discrete energy
/// inequality is violated.
std::vector<double> energy_decay_violations(const Trajectory& traj,
                                            const ModelParams& params);

}  // namespace elsim
