#include "elsim/diagnostics.hpp"

#include <algorithm>
#include <cmath>

#include "elsim/norms.hpp"
#include "elsim/operators.hpp"

namespace elsim {

namespace {

double trapezoid_weight(const GridSpec& g, int ix, int iy) {
    double w = (ix == 0 || ix == g.nodes(0) - 1) ? 0.5 : 1.0;
    if (g.dim() == 2) w *= (iy == 0 || iy == g.nodes(1) - 1) ? 0.5 : 1.0;
    return w;
}

double cell_volume(const GridSpec& g) {
    double v = g.spacing(0);
    if (g.dim() == 2) v *= g.spacing(1);
    return v;
}

// Second-derivative L2 seminorm: all axis pairs of repeated first
// differences (the same stencils the solvers use).
double grad2_l2(const Field& f) {
    const int dim = f.grid().dim();
    double sum = 0.0;
    for (int a = 0; a < dim; ++a) {
        const Field pa = partial(f, a);
        for (int b = 0; b < dim; ++b) {
            const double n = norm_lq(partial(pa, b), 2.0);
            sum += n * n;
        }
    }
    return std::sqrt(sum);
}

}  // namespace

EnergyBreakdown energy(const FluidState& s, const ModelParams& params) {
    params.validate();
    const GridSpec& g = s.rho.grid();
    const Field grad_d = gradient(s.d);
    const ScalarField pot = gl_potential(s.d, params.sigma);
    const double gamma = params.pressure.gamma;
    const double a = params.pressure.a;

    EnergyBreakdown e;
    double kin = 0.0, intern = 0.0, elast = 0.0;
    for (int ix = 0; ix < g.nodes(0); ++ix) {
        for (int iy = 0; iy < g.nodes(1); ++iy) {
            const std::int64_t r = g.index(ix, iy);
            const double w = trapezoid_weight(g, ix, iy);
            const double rho = s.rho.value(0, r);
            double u2 = 0.0;
            for (int c = 0; c < g.dim(); ++c) u2 += s.u.value(c, r) * s.u.value(c, r);
            double gd2 = 0.0;
            for (int c = 0; c < grad_d.components(); ++c)
                gd2 += grad_d.value(c, r) * grad_d.value(c, r);
            kin += w * 0.5 * rho * u2;
            intern += w * a * std::pow(rho, gamma) / (gamma - 1.0);
            elast += w * (0.5 * gd2 + pot.value(0, r));
        }
    }
    const double vol = cell_volume(g);
    e.kinetic = vol * kin;
    e.internal = vol * intern;
    e.elastic = params.lambda * vol * elast;
    e.total = e.kinetic + e.internal + e.elastic;
    return e;
}

double dissipation(const FluidState& s, const ModelParams& params) {
    const double gu = norm_lq(gradient(s.u), 2.0);
    const Field lap_d = laplacian(s.d);
    const DirectorField f = gl_force(s.d, params.sigma);
    const double gl = norm_lq(lap_d - f, 2.0);
    return params.mu * gu * gu + params.lambda * params.nu * gl * gl;
}

std::vector<NormBundle> monitor_norms(const Trajectory& traj) {
    const std::int64_t levels = traj.levels();
    const double dt = traj.time_grid.dt();
    std::vector<NormBundle> out{std::size_t(levels)};
    for (std::int64_t k = 0; k < levels; ++k) {
        const FluidState& s = traj.at(k);
        // Forward difference quotient; backward at the final level.
        const FluidState& sa = traj.at(k < levels - 1 ? k : k - 1);
        const FluidState& sb = traj.at(k < levels - 1 ? k + 1 : k);
        NormBundle& b = out[std::size_t(k)];

        b.rho_w16 = norm_w1q(s.rho, 6.0);
        b.rho_t_l6 = norm_lq((1.0 / dt) * (sb.rho - sa.rho), 6.0);
        b.u_h1 = norm_h1(s.u);
        b.u_grad2_l2 = grad2_l2(s.u);
        b.sqrt_rho_u_t_l2 = weighted_l2(s.rho, (1.0 / dt) * (sb.u - sa.u));
        b.d_h1 = norm_h1(s.d);
        b.d_t_h1 = norm_h1((1.0 / dt) * (sb.d - sa.d));
        b.d_grad2_l2 = grad2_l2(s.d);
        b.grad_d_h2 = norm_h2(gradient(s.d));
    }
    return out;
}

NormBundle norm_sup(const std::vector<NormBundle>& series) {
    NormBundle sup;
    for (const NormBundle& b : series) {
        sup.rho_w16 = std::max(sup.rho_w16, b.rho_w16);
        sup.rho_t_l6 = std::max(sup.rho_t_l6, b.rho_t_l6);
        sup.u_h1 = std::max(sup.u_h1, b.u_h1);
        sup.u_grad2_l2 = std::max(sup.u_grad2_l2, b.u_grad2_l2);
        sup.sqrt_rho_u_t_l2 = std::max(sup.sqrt_rho_u_t_l2, b.sqrt_rho_u_t_l2);
        sup.d_h1 = std::max(sup.d_h1, b.d_h1);
        sup.d_t_h1 = std::max(sup.d_t_h1, b.d_t_h1);
        sup.d_grad2_l2 = std::max(sup.d_grad2_l2, b.d_grad2_l2);
        sup.grad_d_h2 = std::max(sup.grad_d_h2, b.grad_d_h2);
    }
    return sup;
}

std::vector<double> energy_decay_violations(const Trajectory& traj,
                                            const ModelParams& params) {
    const std::int64_t levels = traj.levels();
    const double dt = traj.time_grid.dt();
    const std::size_t nl = std::size_t(levels);
    std::vector<double> energies(nl), diss(nl);
    for (std::int64_t k = 0; k < levels; ++k) {
        energies[std::size_t(k)] = energy(traj.at(k), params).total;
        diss[std::size_t(k)] = dissipation(traj.at(k), params);
    }
    std::vector<double> out(std::size_t(levels) - 1);
    for (std::int64_t k = 0; k + 1 < levels; ++k) {
        const double change = energies[std::size_t(k) + 1] - energies[std::size_t(k)] +
                              dt * 0.5 * (diss[std::size_t(k)] + diss[std::size_t(k) + 1]);
        out[std::size_t(k)] = std::max(change, 0.0);
    }
    return out;
}

}  // namespace elsim
