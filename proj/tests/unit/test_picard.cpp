#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "elsim/experiments.hpp"
#include "elsim/field.hpp"
#include "elsim/grid.hpp"
#include "elsim/picard.hpp"
#include "elsim/state.hpp"

using namespace elsim;

namespace {

Field from_rows(const GridSpec& g, std::vector<std::vector<double>> rows) {
    Field f(g, int(rows.size()));
    for (std::size_t c = 0; c < rows.size(); ++c)
        for (std::size_t i = 0; i < rows[c].size(); ++i)
            f.value(int(c), std::int64_t(i)) = rows[c][i];
    return f;
}

}  // namespace

TEST_CASE("psi_distance matches the five-node hand computation") {
    const GridSpec g = GridSpec::line(5, 1.0);
    const FluidState a(from_rows(g, {{1.0, 2.0, 1.5, 1.0, 0.5}}),
                       from_rows(g, {{0.0, 0.3, -0.2, 0.1, 0.0}}),
                       from_rows(g, {{1.0, 0.9, 0.8, 0.9, 1.0},
                                     {0.0, 0.1, 0.3, 0.2, 0.0},
                                     {0.0, 0.2, 0.1, 0.1, 0.0}}),
                       0.0);
    const FluidState b(from_rows(g, {{1.0, 1.8, 1.6, 1.1, 0.5}}),
                       from_rows(g, {{0.0, 0.25, -0.1, 0.05, 0.0}}),
                       from_rows(g, {{1.0, 0.85, 0.85, 0.95, 1.0},
                                     {0.0, 0.15, 0.25, 0.15, 0.0},
                                     {0.0, 0.10, 0.15, 0.05, 0.0}}),
                       0.0);
    CHECK(psi_distance(a, b) ==
          doctest::Approx(0.28312500000000002).epsilon(1e-14));
    CHECK(psi_distance(a, a) == 0.0);
    // the first argument's density weights the velocity term
    CHECK(psi_distance(a, b) != psi_distance(b, a));
}

TEST_CASE("initial data rejects inadmissible fields") {
    const GridSpec g = GridSpec::line(9, 1.0);
    ModelParams params;
    const InitialData ok = bump_data(g, 0.1, 1.0, params);

    ScalarField bad_rho = ok.rho0;
    bad_rho.value(0, 4) = -1e-6;
    CHECK_THROWS_AS(InitialData(bad_rho, ok.u0, ok.d0), std::invalid_argument);

    VectorField bad_u = ok.u0;
    bad_u.value(0, 0) = 1e-6;
    CHECK_THROWS_AS(InitialData(ok.rho0, bad_u, ok.d0), std::invalid_argument);

    DirectorField bad_d = ok.d0;
    bad_d.value(2, 8) = 0.5;
    CHECK_THROWS_AS(InitialData(ok.rho0, ok.u0, bad_d), std::invalid_argument);

    // slack within 1e-12 is accepted
    VectorField near_u = ok.u0;
    near_u.value(0, 0) = 1e-13;
    CHECK_NOTHROW(InitialData(ok.rho0, near_u, ok.d0));
}

TEST_CASE("initial iterates: heat-flow velocity, frozen director") {
    const GridSpec g = GridSpec::line(17, 1.0);
    ModelParams params;
    const InitialData data = bump_data(g, 0.1, 1.0, params);
    const TimeGrid tg(0.05, 5);
    const auto [v, n] = initial_iterates(data, tg);
    REQUIRE(v.size() == 6);
    REQUIRE(n.size() == 6);
    CHECK(max_abs_diff(v[0], data.u0) == 0.0);
    for (const DirectorField& nk : n) CHECK(max_abs_diff(nk, data.d0) == 0.0);
    // the heat flow damps the velocity monotonically in sup norm
    for (std::size_t k = 1; k < v.size(); ++k)
        CHECK(max_abs(v[k]) <= max_abs(v[k - 1]) + 1e-15);
}

TEST_CASE("picard on the rest state converges in two sweeps exactly") {
    const GridSpec g = GridSpec::line(17, 1.0);
    ModelParams params;
    const InitialData data = bump_data(g, 0.0, 1.0, params);
    PicardConfig cfg;
    cfg.time = TimeGrid(0.02, 20);
    const auto [traj, report] = picard_solve(data, params, cfg);

    CHECK(report.termination == "converged");
    CHECK(report.converged_sweeps() <= 2);
    REQUIRE(report.sweeps.size() >= 2);
    CHECK_FALSE(report.sweeps[0].has_psi);
    CHECK(report.sweeps[1].has_psi);
    CHECK(report.sweeps[1].psi_sup == 0.0);
    CHECK(report.delta == params.delta);

    REQUIRE(traj.levels() == 21);
    const double rho_eq = 1.0 + params.delta;
    for (int k = 0; k < traj.levels(); ++k) {
        const FluidState& s = traj.at(k);
        for (std::int64_t r = 0; r < g.node_count(); ++r)
            CHECK(std::abs(s.rho.value(0, r) - rho_eq) <= 1e-12);
        CHECK(max_abs(s.u) <= 1e-12);
        CHECK(max_abs_diff(s.d, data.d0) <= 1e-12);
    }

    // residuals of the exact steady state vanish identically
    const ResidualSeries res = nonlinear_residual(traj, params);
    REQUIRE(res.time.size() == std::size_t(traj.levels() - 2));
    for (std::size_t k = 0; k < res.time.size(); ++k) {
        CHECK(res.continuity[k] <= 1e-13);
        CHECK(res.momentum[k] <= 1e-13);
        CHECK(res.director[k] <= 1e-13);
    }
}

TEST_CASE("report csv layout") {
    PicardReport rep;
    SweepRecord s1;
    s1.sweep = 1;
    s1.solver_iterations = 12;
    s1.cfl_max = 0.25;
    s1.wall_seconds = 0.5;
    SweepRecord s2 = s1;
    s2.sweep = 2;
    s2.has_psi = true;
    s2.psi_sup = 1e-3;
    SweepRecord s3 = s2;
    s3.sweep = 3;
    s3.psi_sup = 2.5e-4;
    s3.has_ratio = true;
    s3.ratio = 0.25;
    rep.sweeps = {s1, s2, s3};

    const std::string lean = rep.csv(false);
    CHECK(lean.rfind("sweep,psi_sup,ratio,solver_iterations,cfl_max\n", 0) == 0);
    CHECK(lean.find("wall") == std::string::npos);
    CHECK(lean.find("\n1,,,12,") != std::string::npos);   // undefined cells stay empty
    CHECK(std::count(lean.begin(), lean.end(), '\n') == 4);

    const std::string full = rep.csv(true);
    CHECK(full.rfind("sweep,psi_sup,ratio,solver_iterations,cfl_max,wall_seconds\n", 0) == 0);
}

TEST_CASE("linearized sweep validates its frozen inputs") {
    const GridSpec g = GridSpec::line(9, 1.0);
    ModelParams params;
    const InitialData data = bump_data(g, 0.05, 1.0, params);
    PicardConfig cfg;
    cfg.time = TimeGrid(0.01, 4);
    auto [v, n] = initial_iterates(data, cfg.time, cfg.solver);

    std::vector<VectorField> short_v(v.begin(), v.end() - 1);
    CHECK_THROWS_AS((void)solve_linearized(data, short_v, n, params, cfg),
                    std::invalid_argument);

    auto wrong_start = v;
    wrong_start[0].value(0, 4) += 1e-3;
    CHECK_THROWS_AS((void)solve_linearized(data, wrong_start, n, params, cfg),
                    std::invalid_argument);

    CHECK_NOTHROW((void)solve_linearized(data, v, n, params, cfg));
}

TEST_CASE("exhausting max_sweeps raises the nonconvergence error with its report") {
    const GridSpec g = GridSpec::line(17, 1.0);
    ModelParams params;
    const InitialData data = bump_data(g, 0.05, 1.0, params);
    PicardConfig cfg;
    cfg.time = TimeGrid(0.01, 10);
    cfg.psi_tol = 1e-300;  // unreachable
    cfg.max_sweeps = 3;
    cfg.divergence_patience = 100;
    try {
        (void)picard_solve(data, params, cfg);
        FAIL("expected picard_nonconvergence_error");
    } catch (const picard_nonconvergence_error& e) {
        CHECK(e.report.termination == "max_sweeps");
        CHECK(e.report.sweeps.size() == 3);
        CHECK(e.report.psi_cumulative > 0.0);
    }
}

TEST_CASE("picard config validation") {
    PicardConfig cfg;
    cfg.max_sweeps = 1;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = PicardConfig{};
    cfg.psi_tol = 0.0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = PicardConfig{};
    cfg.cfl_warn = 3.0;  // above cfl_error
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    CHECK_NOTHROW(PicardConfig{}.validate());
}
