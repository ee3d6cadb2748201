#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "elsim/config.hpp"
#include "elsim/runner.hpp"

using namespace elsim;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    REQUIRE_MESSAGE(bool(is), "missing file " << path);
    std::stringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

bool exists(const std::string& path) { return bool(std::ifstream(path)); }

const char* kFullConfig = R"(# run description
[grid]
dim = 2
nodes = 17 21          # per axis
extent = 1.0 2.0

[time]
t_end = 0.1
steps = 10

[model]
mu = 2.0
lambda = 0.5
nu = 1.5
sigma = 0.8
delta = 0.01
m = 0 1 0
pressure_a = 1.2
pressure_gamma = 1.4

[initial]
kind = bumps
alpha = 1.0
theta = 0.05

[picard]
psi_tol = 1e-9
max_sweeps = 30
divergence_patience = 4

[solver]
rel_tol = 1e-11
max_iterations = 5000

[experiment]
kind = simulate
epsilons = 1e-2 1e-3
growth_cap = 8
delta_halvings = 3

[output]
snapshot_levels = 0 10
snapshot_fields = rho d
)";

}  // namespace

TEST_CASE("full config parses into every field") {
    const RunConfig c = parse_config(kFullConfig);
    CHECK(c.dim == 2);
    CHECK(c.nodes[0] == 17);
    CHECK(c.nodes[1] == 21);
    CHECK(c.extent[0] == 1.0);
    CHECK(c.extent[1] == 2.0);
    CHECK(c.t_end == 0.1);
    CHECK(c.steps == 10);
    CHECK(c.model.mu == 2.0);
    CHECK(c.model.lambda == 0.5);
    CHECK(c.model.nu == 1.5);
    CHECK(c.model.sigma == 0.8);
    CHECK(c.model.delta == 0.01);
    CHECK(c.model.m == std::array<double, 3>{0.0, 1.0, 0.0});
    CHECK(c.model.pressure.a == 1.2);
    CHECK(c.model.pressure.gamma == 1.4);
    CHECK(c.initial_kind == "bumps");
    CHECK(c.alpha == 1.0);
    CHECK(c.theta == 0.05);
    CHECK(c.psi_tol == 1e-9);
    CHECK(c.max_sweeps == 30);
    CHECK(c.divergence_patience == 4);
    CHECK(c.rel_tol == 1e-11);
    CHECK(c.max_iterations == 5000);
    CHECK(c.experiment == "simulate");
    CHECK(c.epsilons == std::vector<double>{1e-2, 1e-3});
    CHECK(c.growth_cap == 8.0);
    CHECK(c.delta_halvings == 3);
    CHECK(c.snapshot_levels == std::vector<int>{0, 10});
    CHECK(c.snapshot_fields == std::vector<std::string>{"rho", "d"});
    CHECK_NOTHROW(validate_config(c));
}

TEST_CASE("serialize / parse round trip is the identity") {
    RunConfig c = parse_config(kFullConfig);
    CHECK(parse_config(serialize_config(c)) == c);

    // awkward values survive the %.17g round trip
    c.psi_tol = 1.0 / 3.0;
    c.model.delta = 0.1234567890123456789;
    c.epsilons = {1e-300, 0.0, 7.25};
    CHECK(parse_config(serialize_config(c)) == c);

    const RunConfig defaults;
    CHECK(parse_config(serialize_config(defaults)) == defaults);
}

TEST_CASE("parse errors carry 1-based line numbers") {
    try {
        (void)parse_config("x = 1\n");
        FAIL("expected config_error");
    } catch (const config_error& e) {
        CHECK(e.line == 1);
        CHECK(std::string(e.what()).find("outside any") != std::string::npos);
    }
    try {
        (void)parse_config("[grid]\ndim = 1\n\n[warp]\n");
        FAIL("expected config_error");
    } catch (const config_error& e) {
        CHECK(e.line == 4);
        CHECK(std::string(e.what()).find("unknown section") != std::string::npos);
    }
    try {
        (void)parse_config("[grid]\nfrobnicate = 9\n");
        FAIL("expected config_error");
    } catch (const config_error& e) {
        CHECK(e.line == 2);
        CHECK(std::string(e.what()).find("unknown key") != std::string::npos);
    }
    try {
        (void)parse_config("[grid]\n[time]\nt_end = banana\n");
        FAIL("expected config_error");
    } catch (const config_error& e) {
        CHECK(e.line == 3);
        CHECK(std::string(e.what()).find("invalid number") != std::string::npos);
    }
    try {
        (void)parse_config("[model]\nm = 1 0\n");
        FAIL("expected config_error");
    } catch (const config_error& e) {
        CHECK(e.line == 2);
        CHECK(std::string(e.what()).find("expects between") != std::string::npos);
    }
    CHECK_THROWS_AS((void)parse_config("[grid\n"), config_error);
    CHECK_THROWS_AS((void)parse_config("[time]\nno equals sign\n"), config_error);
}

TEST_CASE("overrides reuse the config grammar") {
    RunConfig c;
    apply_override(c, "time.steps=42");
    CHECK(c.steps == 42);
    apply_override(c, "model.m = 1 0 0 ");
    CHECK(c.model.m == std::array<double, 3>{1.0, 0.0, 0.0});
    apply_override(c, "experiment.kind=mms");
    CHECK(c.experiment == "mms");
    CHECK_THROWS_AS(apply_override(c, "steps=42"), config_error);
    CHECK_THROWS_AS(apply_override(c, "time.steps"), config_error);
    CHECK_THROWS_AS(apply_override(c, "time.warp=1"), config_error);
    CHECK_THROWS_AS(apply_override(c, "time.steps=many"), config_error);
}

TEST_CASE("validation names the violated constraint") {
    const auto expect_fail = [](void (*mutate)(RunConfig&), const char* needle) {
        RunConfig c;
        mutate(c);
        try {
            validate_config(c);
            FAIL_CHECK("expected config_error mentioning " << needle);
        } catch (const config_error& e) {
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
            CHECK(e.line == 0);
        }
    };
    expect_fail([](RunConfig& c) { c.dim = 3; }, "grid.dim");
    expect_fail([](RunConfig& c) { c.nodes[0] = 4; }, "grid.nodes");
    expect_fail([](RunConfig& c) { c.extent[0] = -1.0; }, "grid.extent");
    expect_fail([](RunConfig& c) { c.t_end = 0.0; }, "time.t_end");
    expect_fail([](RunConfig& c) { c.steps = 0; }, "time.steps");
    expect_fail([](RunConfig& c) { c.model.delta = 1.5; }, "model:");
    expect_fail([](RunConfig& c) { c.initial_kind = "plasma"; }, "initial.kind");
    expect_fail([](RunConfig& c) { c.initial_kind = "snapshot"; }, "rho_file");
    expect_fail([](RunConfig& c) { c.alpha = -0.5; }, "initial.alpha");
    expect_fail([](RunConfig& c) { c.psi_tol = 0.0; }, "picard.psi_tol");
    expect_fail([](RunConfig& c) { c.max_sweeps = 1; }, "picard.max_sweeps");
    expect_fail([](RunConfig& c) { c.rel_tol = -1e-3; }, "solver.rel_tol");
    expect_fail([](RunConfig& c) { c.experiment = "mystery"; }, "experiment.kind");
    expect_fail([](RunConfig& c) { c.growth_cap = 0.0; }, "experiment.growth_cap");
    expect_fail([](RunConfig& c) { c.snapshot_levels = {300}; }, "snapshot_levels");
    expect_fail([](RunConfig& c) { c.snapshot_fields = {"vorticity"}; }, "snapshot_fields");
    expect_fail(
        [](RunConfig& c) {
            c.experiment = "compat-roundtrip";
            c.dim = 2;
            c.nodes = {17, 17};
        },
        "compat-roundtrip");
}

TEST_CASE("runner leaves a manifest and an error report on failure") {
    RunConfig c;
    c.nodes = {17, 17};
    c.steps = 5;
    c.t_end = 0.005;
    c.initial_kind = "bumps";
    c.alpha = 0.0;       // vacuum background
    c.theta = 0.01;
    c.model.delta = 0.0; // no shift: the momentum floor is unreachable
    const std::string dir = "cfg_io_fail_run";
    const int rc = run_experiment(c, dir);
    CHECK(rc == kExitConfig);
    CHECK(exists(dir + "/manifest.txt"));
    const nlohmann::json j = nlohmann::json::parse(slurp(dir + "/error.json"));
    CHECK(j.at("kind").get<std::string>() == "config");
    CHECK(j.at("exit_code").get<int>() == kExitConfig);
    CHECK_FALSE(j.at("message").get<std::string>().empty());
}

TEST_CASE("runner output is byte-identical across repeat runs") {
    RunConfig c;
    c.nodes = {17, 17};
    c.steps = 5;
    c.t_end = 0.005;
    c.initial_kind = "bumps";
    c.theta = 0.02;
    c.snapshot_levels = {0, 5};
    c.snapshot_fields = {"rho", "u", "d"};
    REQUIRE(run_experiment(c, "cfg_io_det_a") == kExitOk);
    REQUIRE(run_experiment(c, "cfg_io_det_b") == kExitOk);
    for (const char* name :
         {"manifest.txt", "sweeps.csv", "norms.csv", "energy.csv", "residuals.csv",
          "summary.csv", "snap_rho_0.csv", "snap_u_5.csv", "snap_d_5.csv"}) {
        const std::string a = slurp(std::string("cfg_io_det_a/") + name);
        CHECK(a == slurp(std::string("cfg_io_det_b/") + name));
        CHECK_FALSE(a.empty());
    }
    CHECK(exists("cfg_io_det_a/timing.txt"));
}
