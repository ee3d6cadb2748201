#include "elsim/experiments.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "elsim/norms.hpp"
#include "elsim/operators.hpp"
#include "elsim/transport.hpp"

namespace elsim {

namespace {

constexpr double kPi = std::numbers::pi;

// Product of sin^2(pi k x / L) over the used axes: zero on the boundary,
// nonnegative, smooth.
double bump(const GridSpec& g, int ix, int iy, int k) {
    double b = std::sin(kPi * k * g.coord(0, ix) / g.extent(0));
    double out = b * b;
    if (g.dim() == 2) {
        b = std::sin(kPi * k * g.coord(1, iy) / g.extent(1));
        out *= b * b;
    }
    return out;
}

}  // namespace

InitialData bump_data(const GridSpec& grid, double theta, double alpha,
                      const ModelParams& params) {
    if (!(theta >= 0.0) || !std::isfinite(theta))
        throw std::invalid_argument("bump amplitude theta must be nonnegative");
    if (!(alpha >= 0.0) || !std::isfinite(alpha))
        throw std::invalid_argument("background density alpha must be nonnegative");
    ScalarField rho0(grid, 1);
    VectorField u0(grid, grid.dim());
    DirectorField d0(grid, 3);
    const double ud[2] = {1.0, 0.5};
    const double dd[3] = {0.6, -0.3, 0.2};
    for (int ix = 0; ix < grid.nodes(0); ++ix)
        for (int iy = 0; iy < grid.nodes(1); ++iy) {
            const std::int64_t r = grid.index(ix, iy);
            const double b1 = bump(grid, ix, iy, 1);
            rho0.value(0, r) = alpha + theta * b1;
            for (int c = 0; c < grid.dim(); ++c) u0.value(c, r) = theta * ud[c] * b1;
            for (int c = 0; c < 3; ++c)
                d0.value(c, r) = params.m[std::size_t(c)] + theta * dd[c] * b1;
        }
    return InitialData(std::move(rho0), std::move(u0), std::move(d0));
}

InitialData perturb_data(const InitialData& base, double eps) {
    if (!(eps >= 0.0) || !std::isfinite(eps))
        throw std::invalid_argument("perturbation size eps must be nonnegative");
    const GridSpec& grid = base.rho0.grid();
    ScalarField rho0 = base.rho0;
    VectorField u0 = base.u0;
    DirectorField d0 = base.d0;
    const double ud[2] = {0.8, -0.5};
    const double dd[3] = {-0.35, 0.45, -0.25};
    for (int ix = 0; ix < grid.nodes(0); ++ix)
        for (int iy = 0; iy < grid.nodes(1); ++iy) {
            const std::int64_t r = grid.index(ix, iy);
            const double b2 = bump(grid, ix, iy, 2);
            const double b1 = bump(grid, ix, iy, 1);
            rho0.value(0, r) += eps * b2;
            for (int c = 0; c < grid.dim(); ++c) u0.value(c, r) += eps * ud[c] * b2;
            for (int c = 0; c < 3; ++c)
                d0.value(c, r) += eps * dd[c] * (c == 0 ? b2 : b1);
        }
    return InitialData(std::move(rho0), std::move(u0), std::move(d0), base.g);
}

ContinuityResult continuity_experiment(const InitialData& base,
                                       std::span<const double> epsilons,
                                       const ModelParams& params,
                                       const PicardConfig& cfg) {
    auto [base_traj, base_report] = picard_solve(base, params, cfg);
    (void)base_report;

    ContinuityResult result;
    std::vector<double> lx, ly;
    for (const double eps : epsilons) {
        const InitialData pert = perturb_data(base, eps);
        auto [traj, report] = picard_solve(pert, params, cfg);
        (void)report;

        double psi_sup = 0.0;
        double d_sup = 0.0;
        for (std::int64_t k = 0; k < base_traj.levels(); ++k) {
            psi_sup = std::max(psi_sup, psi_distance(base_traj.at(k), traj.at(k)));
            d_sup = std::max(d_sup, norm_h1(base_traj.at(k).d - traj.at(k).d));
        }
        if (eps == 0.0) {
            result.has_control = true;
            result.control_psi_sup = psi_sup;
            continue;
        }
        ContinuityRow row;
        row.eps = eps;
        row.psi0 = psi_distance(base_traj.at(0), traj.at(0));
        row.psi_sup = psi_sup;
        row.d_h1_sup = d_sup;
        result.rows.push_back(row);
        if (row.psi0 > 0.0 && row.psi_sup > 0.0) {
            lx.push_back(std::log(row.psi0));
            ly.push_back(std::log(row.psi_sup));
        }
    }

    if (lx.size() >= 2) {
        double mx = 0.0, my = 0.0;
        for (std::size_t i = 0; i < lx.size(); ++i) {
            mx += lx[i];
            my += ly[i];
        }
        mx /= double(lx.size());
        my /= double(ly.size());
        double num = 0.0, den = 0.0;
        for (std::size_t i = 0; i < lx.size(); ++i) {
            num += (lx[i] - mx) * (ly[i] - my);
            den += (lx[i] - mx) * (lx[i] - mx);
        }
        if (den > 0.0) result.slope = num / den;
    }
    return result;
}

SmallDataResult smalldata_experiment(double theta, double alpha, const GridSpec& grid,
                                     const ModelParams& params, const PicardConfig& cfg,
                                     double growth_cap) {
    if (!(growth_cap > 0.0))
        throw std::invalid_argument("growth cap must be positive");
    const InitialData data = bump_data(grid, theta, alpha, params);
    auto [traj, report] = picard_solve(data, params, cfg);
    std::vector<NormBundle> bundles = monitor_norms(traj);

    SmallDataResult out{std::move(traj), std::move(report), std::move(bundles),
                        NormBundle{}, NormBundle{}, growth_cap, true};
    out.initial = out.bundles.front();
    out.sup = norm_sup(out.bundles);

    // Entries that start at zero are judged against an absolute floor
    // instead of a multiple of zero.
    const double floor = 1e-12;
    const auto check = [&](double sup, double init) {
        if (sup > growth_cap * init + floor) out.within_cap = false;
    };
    check(out.sup.rho_w16, out.initial.rho_w16);
    check(out.sup.rho_t_l6, out.initial.rho_t_l6);
    check(out.sup.u_h1, out.initial.u_h1);
    check(out.sup.u_grad2_l2, out.initial.u_grad2_l2);
    check(out.sup.sqrt_rho_u_t_l2, out.initial.sqrt_rho_u_t_l2);
    check(out.sup.d_h1, out.initial.d_h1);
    check(out.sup.d_t_h1, out.initial.d_t_h1);
    check(out.sup.d_grad2_l2, out.initial.d_grad2_l2);
    check(out.sup.grad_d_h2, out.initial.grad_d_h2);
    return out;
}

std::vector<DeltaSweepRow> delta_sweep(const InitialData& data, const ModelParams& params,
                                       const PicardConfig& cfg, int halvings) {
    if (halvings < 0) throw std::invalid_argument("halving count must be nonnegative");
    std::vector<DeltaSweepRow> rows;
    ModelParams p = params;
    for (int i = 0; i <= halvings; ++i) {
        auto [traj, report] = picard_solve(data, p, cfg);
        DeltaSweepRow row;
        row.delta = p.delta;
        row.sweeps = report.converged_sweeps();
        row.psi_final =
            report.sweeps.empty() ? 0.0 : report.sweeps.back().psi_sup;
        row.rho_min = std::numeric_limits<double>::infinity();
        for (std::int64_t k = 0; k < traj.levels(); ++k)
            row.rho_min = std::min(row.rho_min, min_value(traj.at(k).rho));
        // Certificate recomputed from the converged velocity (the fixed
        // point of the frozen-velocity transport).
        double exponent = 0.0;
        std::vector<double> md(std::size_t(traj.levels()));
        for (std::int64_t k = 0; k < traj.levels(); ++k)
            md[std::size_t(k)] = max_abs(divergence(traj.at(k).u));
        for (std::int64_t k = 0; k + 1 < traj.levels(); ++k)
            exponent +=
                0.5 * traj.time_grid.dt() * (md[std::size_t(k)] + md[std::size_t(k) + 1]);
        row.certificate = (min_value(data.rho0) + p.delta) * std::exp(-exponent) - 1e-12;
        rows.push_back(row);
        p.delta *= 0.5;
    }
    return rows;
}

}  // namespace elsim
