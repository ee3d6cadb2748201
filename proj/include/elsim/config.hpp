#pragma once

#include <array>
#include <string>
#include <vector>

#include "elsim/constitutive.hpp"
#include "elsim/errors.hpp"

namespace elsim {

/// Full description of one run, parsed from a sectioned key = value text
/// config.  Unknown sections or keys are parse errors (with line numbers);
/// constraint violations are validation errors naming the key.
struct RunConfig {
    // [grid]
    int dim = 1;
    std::array<int, 2> nodes{128, 128};
    std::array<double, 2> extent{1.0, 1.0};

    // [time]
    double t_end = 0.2;
    int steps = 200;

    // [model]
    ModelParams model;

    // [initial]  kind: equilibrium | bumps | snapshot
    std::string initial_kind = "equilibrium";
    double alpha = 1.0;
    double theta = 0.05;
    std::string rho_file;
    std::string u_file;
    std::string d_file;

    // [picard]
    double psi_tol = 1e-10;
    int max_sweeps = 50;
    int divergence_patience = 3;

    // [solver]
    double rel_tol = 1e-10;
    int max_iterations = 0;

    // [experiment]  kind: simulate | mms | picard-report | continuity |
    //               smalldata | compat-roundtrip | delta-sweep
    std::string experiment = "simulate";
    std::vector<double> epsilons{1e-2, 1e-3, 1e-4};
    double growth_cap = 10.0;
    int delta_halvings = 4;

    // [output]
    std::string out_dir;
    std::vector<int> snapshot_levels;
    std::vector<std::string> snapshot_fields{"rho", "u", "d"};

    bool operator==(const RunConfig&) const = default;
};

RunConfig parse_config(const std::string& text);
RunConfig parse_config_file(const std::string& path);

/// Applies one "section.key=value" override (same grammar as config values).
void apply_override(RunConfig& cfg, const std::string& assignment);

/// Canonical text form; parse_config(serialize_config(c)) == c.
std::string serialize_config(const RunConfig& cfg);

/// Throws config_error naming the key and the violated constraint.
void validate_config(const RunConfig& cfg);

}  // namespace elsim
