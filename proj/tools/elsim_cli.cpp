#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "elsim/config.hpp"
#include "elsim/runner.hpp"
#include "elsim/version.hpp"

namespace {

struct CommonOptions {
    std::string config_path;
    std::string out_dir;
    std::vector<std::string> overrides;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
    cmd->add_option("-c,--config", opts.config_path, "config file (sectioned key = value)");
    cmd->add_option("-o,--out", opts.out_dir, "output directory");
    cmd->add_option("--override", opts.overrides,
                    "section.key=value override, may be repeated");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"compressible nematic flow bench"};
    app.set_version_flag("--version", elsim::version_string());
    app.require_subcommand(1);

    const std::vector<std::pair<std::string, std::string>> commands = {
        {"simulate", "run the outer iteration and write the full report set"},
        {"mms", "manufactured-solution refinement studies"},
        {"picard-report", "outer iteration with per-sweep norm tracking"},
        {"continuity", "perturbation scaling of the data-to-solution map"},
        {"smalldata", "long-horizon small-amplitude run with norm caps"},
        {"compat-roundtrip", "initial-velocity compatibility round trip"},
        {"delta-sweep", "repeat a run while halving the vacuum shift"},
    };

    CommonOptions opts;
    for (const auto& [name, desc] : commands) add_common(app.add_subcommand(name, desc), opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        // --help / --version exit cleanly; anything else is a usage error.
        return rc == 0 ? elsim::kExitOk : elsim::kExitConfig;
    }

    elsim::RunConfig cfg;
    try {
        if (!opts.config_path.empty()) cfg = elsim::parse_config_file(opts.config_path);
        cfg.experiment = app.get_subcommands().front()->get_name();
        for (const std::string& ov : opts.overrides) elsim::apply_override(cfg, ov);
        elsim::validate_config(cfg);
    } catch (const elsim::config_error& e) {
        if (e.line > 0)
            std::fprintf(stderr, "config error (line %d): %s\n", e.line, e.what());
        else
            std::fprintf(stderr, "config error: %s\n", e.what());
        return elsim::kExitConfig;
    }

    const std::string out_dir = elsim::resolve_out_dir(cfg, opts.out_dir);
    const int code = elsim::run_experiment(cfg, out_dir);
    if (code == elsim::kExitOk)
        std::printf("%s finished, reports in %s\n", cfg.experiment.c_str(), out_dir.c_str());
    else
        std::fprintf(stderr, "%s failed with exit code %d, see %s\n", cfg.experiment.c_str(),
                     code, out_dir.c_str());
    return code;
}
