#pragma once

#include <string>

#include "elsim/config.hpp"

namespace elsim {

// Process exit codes shared by the runner and the CLI.
inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitDiverged = 3;
inline constexpr int kExitNoConvergence = 4;
inline constexpr int kExitIo = 5;

/// Output directory resolution order: cli_out flag, then [output] dir, then
/// $ELSIM_OUT_ROOT/run, then ./out.
std::string resolve_out_dir(const RunConfig& cfg, const std::string& cli_out);

/// Executes the configured experiment, writing into out_dir: manifest.txt
/// first (config echo + version), then the experiment's CSV reports and any
/// scheduled snapshots.  All CSVs are deterministic for a fixed config;
/// wall-clock timing goes to timing.txt only.  On failure an error.json with
/// the error kind and message is left next to the manifest and the matching
/// exit code is returned.
int run_experiment(const RunConfig& cfg, const std::string& out_dir);

}  // namespace elsim
