#include "elsim/config.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace elsim {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && std::isspace((unsigned char)s[b])) ++b;
    while (e > b && std::isspace((unsigned char)s[e - 1])) --e;
    return s.substr(b, e - b);
}

double parse_double(const std::string& raw, const std::string& key, int line) {
    const std::string s = trim(raw);
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw config_error("invalid number '" + s + "' for key '" + key + "'", line);
    }
    if (used != s.size())
        throw config_error("trailing characters after number for key '" + key + "'", line);
    return v;
}

int parse_int(const std::string& raw, const std::string& key, int line) {
    const std::string s = trim(raw);
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(s, &used);
    } catch (const std::exception&) {
        throw config_error("invalid integer '" + s + "' for key '" + key + "'", line);
    }
    if (used != s.size())
        throw config_error("trailing characters after integer for key '" + key + "'", line);
    return int(v);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

std::vector<double> parse_doubles(const std::string& raw, const std::string& key, int line,
                                  std::size_t min_count, std::size_t max_count) {
    std::vector<double> out;
    for (const std::string& tok : split_ws(raw)) out.push_back(parse_double(tok, key, line));
    if (out.size() < min_count || out.size() > max_count)
        throw config_error("key '" + key + "' expects between " + std::to_string(min_count) +
                               " and " + std::to_string(max_count) + " values",
                           line);
    return out;
}

std::vector<int> parse_ints(const std::string& raw, const std::string& key, int line,
                            std::size_t min_count, std::size_t max_count) {
    std::vector<int> out;
    for (const std::string& tok : split_ws(raw)) out.push_back(parse_int(tok, key, line));
    if (out.size() < min_count || out.size() > max_count)
        throw config_error("key '" + key + "' expects between " + std::to_string(min_count) +
                               " and " + std::to_string(max_count) + " values",
                           line);
    return out;
}

using Handler = std::function<void(RunConfig&, const std::string& value, int line)>;

const std::map<std::string, Handler>& handlers() {
    static const std::map<std::string, Handler> table = [] {
        std::map<std::string, Handler> t;
        t["grid.dim"] = [](RunConfig& c, const std::string& v, int l) {
            c.dim = parse_int(v, "grid.dim", l);
        };
        t["grid.nodes"] = [](RunConfig& c, const std::string& v, int l) {
            const auto vals = parse_ints(v, "grid.nodes", l, 1, 2);
            c.nodes[0] = vals[0];
            if (vals.size() == 2) c.nodes[1] = vals[1];
        };
        t["grid.extent"] = [](RunConfig& c, const std::string& v, int l) {
            const auto vals = parse_doubles(v, "grid.extent", l, 1, 2);
            c.extent[0] = vals[0];
            if (vals.size() == 2) c.extent[1] = vals[1];
        };
        t["time.t_end"] = [](RunConfig& c, const std::string& v, int l) {
            c.t_end = parse_double(v, "time.t_end", l);
        };
        t["time.steps"] = [](RunConfig& c, const std::string& v, int l) {
            c.steps = parse_int(v, "time.steps", l);
        };
        t["model.mu"] = [](RunConfig& c, const std::string& v, int l) {
            c.model.mu = parse_double(v, "model.mu", l);
        };
        t["model.lambda"] = [](RunConfig& c, const std::string& v, int l) {
            c.model.lambda = parse_double(v, "model.lambda", l);
        };
        t["model.nu"] = [](RunConfig& c, const std::string& v, int l) {
            c.model.nu = parse_double(v, "model.nu", l);
        };
        t["model.sigma"] = [](RunConfig& c, const std::string& v, int l) {
            c.model.sigma = parse_double(v, "model.sigma", l);
        };
        t["model.delta"] = [](RunConfig& c, const std::string& v, int l) {
            c.model.delta = parse_double(v, "model.delta", l);
        };
        t["model.m"] = [](RunConfig& c, const std::string& v, int l) {
            const auto vals = parse_doubles(v, "model.m", l, 3, 3);
            c.model.m = {vals[0], vals[1], vals[2]};
        };
        t["model.pressure_a"] = [](RunConfig& c, const std::string& v, int l) {
            c.model.pressure.a = parse_double(v, "model.pressure_a", l);
        };
        t["model.pressure_gamma"] = [](RunConfig& c, const std::string& v, int l) {
            c.model.pressure.gamma = parse_double(v, "model.pressure_gamma", l);
        };
        t["initial.kind"] = [](RunConfig& c, const std::string& v, int) {
            c.initial_kind = trim(v);
        };
        t["initial.alpha"] = [](RunConfig& c, const std::string& v, int l) {
            c.alpha = parse_double(v, "initial.alpha", l);
        };
        t["initial.theta"] = [](RunConfig& c, const std::string& v, int l) {
            c.theta = parse_double(v, "initial.theta", l);
        };
        t["initial.rho_file"] = [](RunConfig& c, const std::string& v, int) {
            c.rho_file = trim(v);
        };
        t["initial.u_file"] = [](RunConfig& c, const std::string& v, int) {
            c.u_file = trim(v);
        };
        t["initial.d_file"] = [](RunConfig& c, const std::string& v, int) {
            c.d_file = trim(v);
        };
        t["picard.psi_tol"] = [](RunConfig& c, const std::string& v, int l) {
            c.psi_tol = parse_double(v, "picard.psi_tol", l);
        };
        t["picard.max_sweeps"] = [](RunConfig& c, const std::string& v, int l) {
            c.max_sweeps = parse_int(v, "picard.max_sweeps", l);
        };
        t["picard.divergence_patience"] = [](RunConfig& c, const std::string& v, int l) {
            c.divergence_patience = parse_int(v, "picard.divergence_patience", l);
        };
        t["solver.rel_tol"] = [](RunConfig& c, const std::string& v, int l) {
            c.rel_tol = parse_double(v, "solver.rel_tol", l);
        };
        t["solver.max_iterations"] = [](RunConfig& c, const std::string& v, int l) {
            c.max_iterations = parse_int(v, "solver.max_iterations", l);
        };
        t["experiment.kind"] = [](RunConfig& c, const std::string& v, int) {
            c.experiment = trim(v);
        };
        t["experiment.epsilons"] = [](RunConfig& c, const std::string& v, int l) {
            c.epsilons = parse_doubles(v, "experiment.epsilons", l, 1, 64);
        };
        t["experiment.growth_cap"] = [](RunConfig& c, const std::string& v, int l) {
            c.growth_cap = parse_double(v, "experiment.growth_cap", l);
        };
        t["experiment.delta_halvings"] = [](RunConfig& c, const std::string& v, int l) {
            c.delta_halvings = parse_int(v, "experiment.delta_halvings", l);
        };
        t["output.dir"] = [](RunConfig& c, const std::string& v, int) {
            c.out_dir = trim(v);
        };
        t["output.snapshot_levels"] = [](RunConfig& c, const std::string& v, int l) {
            c.snapshot_levels = parse_ints(v, "output.snapshot_levels", l, 0, 4096);
        };
        t["output.snapshot_fields"] = [](RunConfig& c, const std::string& v, int) {
            c.snapshot_fields = split_ws(v);
        };
        return t;
    }();
    return table;
}

const char* kSections[] = {"grid", "time", "model", "initial", "picard", "solver",
                           "experiment", "output"};

bool known_section(const std::string& s) {
    for (const char* k : kSections)
        if (s == k) return true;
    return false;
}

void apply_key(RunConfig& cfg, const std::string& full_key, const std::string& value,
               int line) {
    const auto& table = handlers();
    const auto it = table.find(full_key);
    if (it == table.end())
        throw config_error("unknown key '" + full_key + "'", line);
    it->second(cfg, value, line);
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

RunConfig parse_config(const std::string& text) {
    RunConfig cfg;
    std::stringstream ss(text);
    std::string raw;
    std::string section;
    int line = 0;
    while (std::getline(ss, raw)) {
        ++line;
        const std::size_t hash = raw.find('#');
        if (hash != std::string::npos) raw = raw.substr(0, hash);
        const std::string s = trim(raw);
        if (s.empty()) continue;
        if (s.front() == '[') {
            if (s.back() != ']')
                throw config_error("malformed section header '" + s + "'", line);
            section = trim(s.substr(1, s.size() - 2));
            if (!known_section(section))
                throw config_error("unknown section '" + section + "'", line);
            continue;
        }
        const std::size_t eq = s.find('=');
        if (eq == std::string::npos)
            throw config_error("expected 'key = value', got '" + s + "'", line);
        if (section.empty())
            throw config_error("key outside any [section]", line);
        const std::string key = trim(s.substr(0, eq));
        const std::string value = s.substr(eq + 1);
        if (key.empty()) throw config_error("empty key", line);
        apply_key(cfg, section + "." + key, value, line);
    }
    return cfg;
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw config_error("cannot open config file '" + path + "'", 0);
    std::stringstream ss;
    ss << is.rdbuf();
    return parse_config(ss.str());
}

void apply_override(RunConfig& cfg, const std::string& assignment) {
    const std::size_t eq = assignment.find('=');
    if (eq == std::string::npos)
        throw config_error("override must look like section.key=value, got '" +
                               assignment + "'",
                           0);
    const std::string key = trim(assignment.substr(0, eq));
    const std::string value = assignment.substr(eq + 1);
    if (key.find('.') == std::string::npos)
        throw config_error("override key must be section.key, got '" + key + "'", 0);
    apply_key(cfg, key, value, 0);
}

std::string serialize_config(const RunConfig& cfg) {
    std::string out;
    out += "[grid]\n";
    out += "dim = " + std::to_string(cfg.dim) + "\n";
    out += "nodes = " + std::to_string(cfg.nodes[0]) + " " + std::to_string(cfg.nodes[1]) + "\n";
    out += "extent = " + fmt(cfg.extent[0]) + " " + fmt(cfg.extent[1]) + "\n";
    out += "\n[time]\n";
    out += "t_end = " + fmt(cfg.t_end) + "\n";
    out += "steps = " + std::to_string(cfg.steps) + "\n";
    out += "\n[model]\n";
    out += "mu = " + fmt(cfg.model.mu) + "\n";
    out += "lambda = " + fmt(cfg.model.lambda) + "\n";
    out += "nu = " + fmt(cfg.model.nu) + "\n";
    out += "sigma = " + fmt(cfg.model.sigma) + "\n";
    out += "delta = " + fmt(cfg.model.delta) + "\n";
    out += "m = " + fmt(cfg.model.m[0]) + " " + fmt(cfg.model.m[1]) + " " +
           fmt(cfg.model.m[2]) + "\n";
    out += "pressure_a = " + fmt(cfg.model.pressure.a) + "\n";
    out += "pressure_gamma = " + fmt(cfg.model.pressure.gamma) + "\n";
    out += "\n[initial]\n";
    out += "kind = " + cfg.initial_kind + "\n";
    out += "alpha = " + fmt(cfg.alpha) + "\n";
    out += "theta = " + fmt(cfg.theta) + "\n";
    if (!cfg.rho_file.empty()) out += "rho_file = " + cfg.rho_file + "\n";
    if (!cfg.u_file.empty()) out += "u_file = " + cfg.u_file + "\n";
    if (!cfg.d_file.empty()) out += "d_file = " + cfg.d_file + "\n";
    out += "\n[picard]\n";
    out += "psi_tol = " + fmt(cfg.psi_tol) + "\n";
    out += "max_sweeps = " + std::to_string(cfg.max_sweeps) + "\n";
    out += "divergence_patience = " + std::to_string(cfg.divergence_patience) + "\n";
    out += "\n[solver]\n";
    out += "rel_tol = " + fmt(cfg.rel_tol) + "\n";
    out += "max_iterations = " + std::to_string(cfg.max_iterations) + "\n";
    out += "\n[experiment]\n";
    out += "kind = " + cfg.experiment + "\n";
    out += "epsilons =";
    for (const double e : cfg.epsilons) out += " " + fmt(e);
    out += "\n";
    out += "growth_cap = " + fmt(cfg.growth_cap) + "\n";
    out += "delta_halvings = " + std::to_string(cfg.delta_halvings) + "\n";
    out += "\n[output]\n";
    if (!cfg.out_dir.empty()) out += "dir = " + cfg.out_dir + "\n";
    if (!cfg.snapshot_levels.empty()) {
        out += "snapshot_levels =";
        for (const int l : cfg.snapshot_levels) out += " " + std::to_string(l);
        out += "\n";
    }
    out += "snapshot_fields =";
    for (const std::string& f : cfg.snapshot_fields) out += " " + f;
    out += "\n";
    return out;
}

void validate_config(const RunConfig& cfg) {
    const auto fail = [](const std::string& msg) { throw config_error(msg, 0); };
    if (cfg.dim != 1 && cfg.dim != 2) fail("grid.dim must be 1 or 2");
    for (int a = 0; a < cfg.dim; ++a) {
        if (cfg.nodes[std::size_t(a)] < 5) fail("grid.nodes must be at least 5 per axis");
        if (!(cfg.extent[std::size_t(a)] > 0.0) ||
            !std::isfinite(cfg.extent[std::size_t(a)]))
            fail("grid.extent must be positive");
    }
    if (!(cfg.t_end > 0.0) || !std::isfinite(cfg.t_end)) fail("time.t_end must be positive");
    if (cfg.steps < 1) fail("time.steps must be at least 1");
    try {
        cfg.model.validate();
    } catch (const std::invalid_argument& e) {
        fail(std::string("model: ") + e.what());
    }
    if (cfg.initial_kind != "equilibrium" && cfg.initial_kind != "bumps" &&
        cfg.initial_kind != "snapshot")
        fail("initial.kind must be equilibrium, bumps or snapshot");
    if (!(cfg.alpha >= 0.0) || !std::isfinite(cfg.alpha))
        fail("initial.alpha must be nonnegative");
    if (!(cfg.theta >= 0.0) || !std::isfinite(cfg.theta))
        fail("initial.theta must be nonnegative");
    if (cfg.initial_kind == "snapshot" &&
        (cfg.rho_file.empty() || cfg.u_file.empty() || cfg.d_file.empty()))
        fail("initial.kind = snapshot needs rho_file, u_file and d_file");
    if (!(cfg.psi_tol > 0.0)) fail("picard.psi_tol must be positive");
    if (cfg.max_sweeps < 2) fail("picard.max_sweeps must be at least 2");
    if (cfg.divergence_patience < 1) fail("picard.divergence_patience must be at least 1");
    if (!(cfg.rel_tol > 0.0)) fail("solver.rel_tol must be positive");
    if (cfg.max_iterations < 0) fail("solver.max_iterations must be nonnegative");
    const char* kinds[] = {"simulate",  "mms",              "picard-report", "continuity",
                           "smalldata", "compat-roundtrip", "delta-sweep"};
    bool ok = false;
    for (const char* k : kinds)
        if (cfg.experiment == k) ok = true;
    if (!ok) fail("experiment.kind '" + cfg.experiment + "' is not recognized");
    for (const double e : cfg.epsilons)
        if (!(e >= 0.0) || !std::isfinite(e)) fail("experiment.epsilons must be nonnegative");
    if (!(cfg.growth_cap > 0.0)) fail("experiment.growth_cap must be positive");
    if (cfg.delta_halvings < 0) fail("experiment.delta_halvings must be nonnegative");
    for (const int l : cfg.snapshot_levels)
        if (l < 0 || l > cfg.steps) fail("output.snapshot_levels must lie in [0, steps]");
    for (const std::string& f : cfg.snapshot_fields)
        if (f != "rho" && f != "u" && f != "d")
            fail("output.snapshot_fields entries must be rho, u or d");
    if (cfg.experiment == "compat-roundtrip" && cfg.dim != 1)
        fail("experiment.kind = compat-roundtrip runs on dim = 1");
}

}  // namespace elsim
