#include <doctest.h>

#include <cmath>
#include <vector>

#include "elsim/constitutive.hpp"
#include "elsim/diagnostics.hpp"
#include "elsim/experiments.hpp"
#include "elsim/field.hpp"
#include "elsim/grid.hpp"
#include "elsim/norms.hpp"
#include "elsim/operators.hpp"
#include "elsim/picard.hpp"
#include "elsim/state.hpp"

using namespace elsim;

namespace {

FluidState rest_state(const GridSpec& g, double rho_val, const ModelParams& params,
                      double time = 0.0) {
    ScalarField rho(g, 1);
    for (std::int64_t r = 0; r < g.node_count(); ++r) rho.value(0, r) = rho_val;
    VectorField u(g, g.dim());
    DirectorField d(g, 3);
    for (int c = 0; c < 3; ++c)
        for (std::int64_t r = 0; r < g.node_count(); ++r)
            d.value(c, r) = params.m[std::size_t(c)];
    return FluidState(std::move(rho), std::move(u), std::move(d), time);
}

FluidState wavy_state(const GridSpec& g, const ModelParams& params, double time = 0.0) {
    const int n = g.nodes(0);
    ScalarField rho(g, 1);
    VectorField u(g, 1);
    DirectorField d(g, 3);
    for (int i = 0; i < n; ++i) {
        const double x = g.coord(0, i);
        rho.value(0, i) = 1.0 + 0.2 * std::sin(M_PI * x);
        u.value(0, i) = 0.3 * std::sin(2.0 * M_PI * x);
        const double phi = 0.4 * std::sin(M_PI * x);
        d.value(0, i) = std::sin(phi);
        d.value(2, i) = std::cos(phi);
    }
    return FluidState(std::move(rho), std::move(u), std::move(d), time);
}

}  // namespace

TEST_CASE("energy of the rest state: internal part only") {
    const GridSpec g = GridSpec::line(33, 1.0);
    ModelParams params;
    const FluidState s = rest_state(g, 1.001, params);
    const EnergyBreakdown e = energy(s, params);
    CHECK(e.kinetic == 0.0);
    CHECK(e.elastic == 0.0);
    // int a rho^gamma / (gamma - 1) over the unit interval, rho = 1.001
    CHECK(e.internal == doctest::Approx(2.5035006998600560).epsilon(1e-14));
    CHECK(e.total == e.kinetic + e.internal + e.elastic);
    CHECK(dissipation(s, params) == 0.0);
}

TEST_CASE("kinetic energy hand value on five nodes") {
    const GridSpec g = GridSpec::line(5, 1.0);
    ModelParams params;
    ScalarField rho(g, 1);
    VectorField u(g, 1);
    for (int i = 0; i < 5; ++i) rho.value(0, i) = 2.0;
    u.value(0, 1) = 1.0;
    u.value(0, 3) = 1.0;
    DirectorField d(g, 3);
    for (int i = 0; i < 5; ++i) d.value(2, i) = 1.0;
    const FluidState s(rho, u, d, 0.0);
    // 0.5 * h * sum(w * rho * u^2) = 0.5 * 0.25 * (2 + 2) = 0.5 exactly
    CHECK(energy(s, params).kinetic == 0.5);
}

TEST_CASE("dissipation assembles mu and lambda*nu with the library stencils") {
    const GridSpec g = GridSpec::line(41, 1.0);
    ModelParams params;
    params.mu = 2.0;
    params.lambda = 3.0;
    params.nu = 0.5;
    params.sigma = 0.8;
    const FluidState s = wavy_state(g, params);

    const double gu = norm_lq(gradient(s.u), 2.0);
    const Field relax = laplacian(s.d) - gl_force(s.d, params.sigma);
    const double rd = norm_lq(relax, 2.0);
    const double expected = params.mu * gu * gu + params.lambda * params.nu * rd * rd;
    CHECK(dissipation(s, params) == doctest::Approx(expected).epsilon(1e-13));
    CHECK(dissipation(s, params) > 0.0);
}

TEST_CASE("monitor norms on a steady trajectory") {
    const GridSpec g = GridSpec::line(17, 1.0);
    ModelParams params;
    const TimeGrid tg(0.02, 2);
    std::vector<FluidState> states;
    for (int k = 0; k <= 2; ++k) states.push_back(rest_state(g, 1.001, params, tg.time(k)));
    const Trajectory traj(tg, std::move(states));

    const std::vector<NormBundle> bundles = monitor_norms(traj);
    REQUIRE(bundles.size() == 3);
    for (const NormBundle& b : bundles) {
        CHECK(b.rho_w16 == doctest::Approx(1.001).epsilon(1e-14));
        CHECK(b.rho_t_l6 == 0.0);
        CHECK(b.u_h1 == 0.0);
        CHECK(b.u_grad2_l2 == 0.0);
        CHECK(b.sqrt_rho_u_t_l2 == 0.0);
        CHECK(b.d_h1 == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(b.d_t_h1 == 0.0);
        CHECK(b.d_grad2_l2 == 0.0);
        CHECK(b.grad_d_h2 == 0.0);
    }
}

TEST_CASE("time quotients: forward inside, backward at the last level") {
    const GridSpec g = GridSpec::line(17, 1.0);
    ModelParams params;
    const TimeGrid tg(0.02, 2);
    std::vector<FluidState> states;
    for (int k = 0; k <= 2; ++k) {
        FluidState s = rest_state(g, 1.0, params, tg.time(k));
        for (std::int64_t r = 0; r < g.node_count(); ++r)
            s.rho.value(0, r) = 1.0 + 3.0 * tg.time(k);
        states.push_back(std::move(s));
    }
    const Trajectory traj(tg, std::move(states));
    const std::vector<NormBundle> bundles = monitor_norms(traj);
    REQUIRE(bundles.size() == 3);
    // (rho^{k+1} - rho^k)/dt = 3 at every node, at every level including the
    // last one (backward quotient there), and the L6 norm of a constant over
    // the unit interval is that constant.
    for (const NormBundle& b : bundles)
        CHECK(b.rho_t_l6 == doctest::Approx(3.0).epsilon(1e-13));
}

TEST_CASE("norm_sup is the entrywise maximum") {
    NormBundle a;
    a.rho_w16 = 1.0;
    a.rho_t_l6 = 5.0;
    a.u_h1 = 0.25;
    a.d_t_h1 = 7.0;
    NormBundle b;
    b.rho_w16 = 2.0;
    b.rho_t_l6 = 4.0;
    b.u_h1 = 0.5;
    b.grad_d_h2 = 1.5;
    const NormBundle s = norm_sup({a, b});
    CHECK(s.rho_w16 == 2.0);
    CHECK(s.rho_t_l6 == 5.0);
    CHECK(s.u_h1 == 0.5);
    CHECK(s.d_t_h1 == 7.0);
    CHECK(s.grad_d_h2 == 1.5);
    CHECK(s.u_grad2_l2 == 0.0);
}

TEST_CASE("energy decay violations vanish on the steady trajectory") {
    const GridSpec g = GridSpec::line(17, 1.0);
    ModelParams params;
    const TimeGrid tg(0.02, 4);
    std::vector<FluidState> states;
    for (int k = 0; k <= 4; ++k) states.push_back(rest_state(g, 1.001, params, tg.time(k)));
    const std::vector<double> v = energy_decay_violations(Trajectory(tg, std::move(states)), params);
    REQUIRE(v.size() == 4);
    for (double x : v) CHECK(x == 0.0);
}

TEST_CASE("energy decay violations on a solved run are small and nonnegative") {
    const GridSpec g = GridSpec::line(33, 1.0);
    ModelParams params;
    const InitialData data = bump_data(g, 0.02, 1.0, params);
    PicardConfig cfg;
    cfg.time = TimeGrid(0.02, 20);
    cfg.collect_norms = false;
    const auto [traj, report] = picard_solve(data, params, cfg);
    const std::vector<double> v = energy_decay_violations(traj, params);
    REQUIRE(v.size() == std::size_t(traj.levels() - 1));
    for (double x : v) {
        CHECK(std::isfinite(x));
        CHECK(x >= 0.0);
    }
}
