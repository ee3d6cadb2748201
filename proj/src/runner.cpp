#include "elsim/runner.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "elsim/diagnostics.hpp"
#include "elsim/experiments.hpp"
#include "elsim/mms.hpp"
#include "elsim/norms.hpp"
#include "elsim/operators.hpp"
#include "elsim/parabolic.hpp"
#include "elsim/picard.hpp"
#include "elsim/snapshot.hpp"
#include "elsim/version.hpp"

namespace elsim {

namespace {

namespace fs = std::filesystem;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void write_text(const fs::path& path, const std::string& text) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path.string() + " for writing");
    os << text;
    if (!os) throw std::runtime_error("write to " + path.string() + " failed");
}

GridSpec make_grid(const RunConfig& cfg) {
    if (cfg.dim == 1) return GridSpec::line(cfg.nodes[0], cfg.extent[0]);
    return GridSpec::box(cfg.nodes[0], cfg.nodes[1], cfg.extent[0], cfg.extent[1]);
}

PicardConfig make_picard_config(const RunConfig& cfg) {
    PicardConfig pc;
    pc.time = TimeGrid(cfg.t_end, cfg.steps);
    pc.psi_tol = cfg.psi_tol;
    pc.max_sweeps = cfg.max_sweeps;
    pc.divergence_patience = cfg.divergence_patience;
    pc.solver.rel_tol = cfg.rel_tol;
    pc.solver.max_iterations = cfg.max_iterations;
    return pc;
}

InitialData make_initial(const RunConfig& cfg, const GridSpec& grid) {
    if (cfg.initial_kind == "equilibrium") {
        ScalarField rho0(grid, 1);
        VectorField u0(grid, grid.dim());
        DirectorField d0(grid, 3);
        for (std::int64_t r = 0; r < grid.node_count(); ++r) {
            rho0.value(0, r) = cfg.alpha;
            for (int c = 0; c < 3; ++c) d0.value(c, r) = cfg.model.m[std::size_t(c)];
        }
        return InitialData(std::move(rho0), std::move(u0), std::move(d0));
    }
    if (cfg.initial_kind == "bumps")
        return bump_data(grid, cfg.theta, cfg.alpha, cfg.model);

    const Snapshot rho_s = read_snapshot(fs::path(cfg.rho_file));
    const Snapshot u_s = read_snapshot(fs::path(cfg.u_file));
    const Snapshot d_s = read_snapshot(fs::path(cfg.d_file));
    if (!(rho_s.field.grid() == grid) || !(u_s.field.grid() == grid) ||
        !(d_s.field.grid() == grid))
        throw config_error("snapshot grids do not match the [grid] section", 0);
    return InitialData(rho_s.field, u_s.field, d_s.field);
}

std::string norms_csv(const Trajectory& traj) {
    const std::vector<NormBundle> bundles = monitor_norms(traj);
    std::string out =
        "time,rho_w16,rho_t_l6,u_h1,u_grad2_l2,sqrt_rho_u_t_l2,d_h1,d_t_h1,"
        "d_grad2_l2,grad_d_h2\n";
    for (std::int64_t k = 0; k < traj.levels(); ++k) {
        const NormBundle& b = bundles[std::size_t(k)];
        out += fmt(traj.at(k).time);
        for (const double v : {b.rho_w16, b.rho_t_l6, b.u_h1, b.u_grad2_l2,
                               b.sqrt_rho_u_t_l2, b.d_h1, b.d_t_h1, b.d_grad2_l2,
                               b.grad_d_h2})
            out += "," + fmt(v);
        out += "\n";
    }
    return out;
}

std::string energy_csv(const Trajectory& traj, const ModelParams& params) {
    const std::vector<double> viol = energy_decay_violations(traj, params);
    std::string out = "time,kinetic,internal,elastic,total,dissipation,violation\n";
    for (std::int64_t k = 0; k < traj.levels(); ++k) {
        const EnergyBreakdown e = energy(traj.at(k), params);
        const double d = dissipation(traj.at(k), params);
        const double v = k == 0 ? 0.0 : viol[std::size_t(k) - 1];
        out += fmt(traj.at(k).time) + "," + fmt(e.kinetic) + "," + fmt(e.internal) + "," +
               fmt(e.elastic) + "," + fmt(e.total) + "," + fmt(d) + "," + fmt(v) + "\n";
    }
    return out;
}

std::string residuals_csv(const Trajectory& traj, const ModelParams& params) {
    const ResidualSeries rs = nonlinear_residual(traj, params);
    std::string out = "time,continuity,momentum,director\n";
    for (std::size_t k = 0; k < rs.time.size(); ++k)
        out += fmt(rs.time[k]) + "," + fmt(rs.continuity[k]) + "," + fmt(rs.momentum[k]) +
               "," + fmt(rs.director[k]) + "\n";
    return out;
}

void write_snapshots(const RunConfig& cfg, const Trajectory& traj, const fs::path& dir) {
    for (const int level : cfg.snapshot_levels) {
        const FluidState& s = traj.at(level);
        for (const std::string& f : cfg.snapshot_fields) {
            const Field* field = nullptr;
            if (f == "rho") field = &s.rho;
            if (f == "u") field = &s.u;
            if (f == "d") field = &s.d;
            write_snapshot(dir / ("snap_" + f + "_" + std::to_string(level) + ".csv"),
                           *field, s.time);
        }
    }
}

void write_timing(const PicardReport& report, double total_seconds, const fs::path& dir) {
    std::string out = "total_seconds " + fmt(total_seconds) + "\n";
    for (const SweepRecord& rec : report.sweeps)
        out += "sweep_" + std::to_string(rec.sweep) + "_seconds " + fmt(rec.wall_seconds) +
               "\n";
    write_text(dir / "timing.txt", out);
}

std::string sweep_norms_csv(const PicardReport& report) {
    std::string out =
        "sweep,rho_w16,rho_t_l6,u_h1,u_grad2_l2,sqrt_rho_u_t_l2,d_h1,d_t_h1,"
        "d_grad2_l2,grad_d_h2\n";
    for (std::size_t k = 0; k < report.sweep_norm_sup.size(); ++k) {
        const NormBundle& b = report.sweep_norm_sup[k];
        out += std::to_string(k + 1);
        for (const double v : {b.rho_w16, b.rho_t_l6, b.u_h1, b.u_grad2_l2,
                               b.sqrt_rho_u_t_l2, b.d_h1, b.d_t_h1, b.d_grad2_l2,
                               b.grad_d_h2})
            out += "," + fmt(v);
        out += "\n";
    }
    return out;
}

std::string run_summary_csv(const Trajectory& traj, const PicardReport& report) {
    double rho_min = std::numeric_limits<double>::infinity();
    for (std::int64_t k = 0; k < traj.levels(); ++k)
        rho_min = std::min(rho_min, min_value(traj.at(k).rho));
    double cfl_max = 0.0;
    for (const SweepRecord& rec : report.sweeps) cfl_max = std::max(cfl_max, rec.cfl_max);
    std::string out = "key,value\n";
    out += "termination," + report.termination + "\n";
    out += "sweeps," + std::to_string(report.converged_sweeps()) + "\n";
    out += "psi_sup_final," +
           (report.sweeps.empty() || !report.sweeps.back().has_psi
                ? std::string()
                : fmt(report.sweeps.back().psi_sup)) +
           "\n";
    out += "delta," + fmt(report.delta) + "\n";
    out += "rho_min," + fmt(rho_min) + "\n";
    out += "cfl_max," + fmt(cfl_max) + "\n";
    return out;
}

// Fixed smooth 1-D data for the compatibility round trip: the density stays
// above 1/2, the director is exactly unit length, and everything has a
// closed-form source
//   g = rho0^{-1/2} (mu u0'' - lambda phi' phi'' - a gamma rho0^{gamma-1} rho0')
// with phi = 0.5 sin(pi x).
struct CompatData {
    ScalarField rho0;
    VectorField u0;
    DirectorField d0;
    VectorField g_exact;
};

CompatData compat_data(const GridSpec& grid, const ModelParams& params) {
    const double pi = 3.14159265358979323846;
    CompatData out{ScalarField(grid, 1), VectorField(grid, 1), DirectorField(grid, 3),
                   VectorField(grid, 1)};
    for (int i = 0; i < grid.nodes(0); ++i) {
        const double x = grid.coord(0, i);
        const double rho = 1.0 + 0.3 * std::sin(pi * x);
        const double u = 0.4 * std::sin(pi * x);
        const double phi = 0.5 * std::sin(pi * x);
        const double upp = -0.4 * pi * pi * std::sin(pi * x);
        const double phip = 0.5 * pi * std::cos(pi * x);
        const double phipp = -0.5 * pi * pi * std::sin(pi * x);
        const double rhop = 0.3 * pi * std::cos(pi * x);
        const double pp = params.pressure.a * params.pressure.gamma *
                          std::pow(rho, params.pressure.gamma - 1.0) * rhop;
        out.rho0.value(0, i) = rho;
        out.u0.value(0, i) = u;
        out.d0.value(0, i) = std::cos(phi);
        out.d0.value(1, i) = std::sin(phi);
        out.d0.value(2, i) = 0.0;
        out.g_exact.value(0, i) =
            (params.mu * upp - params.lambda * phip * phipp - pp) / std::sqrt(rho);
    }
    return out;
}

int dispatch(const RunConfig& cfg, const fs::path& dir) {
    const GridSpec grid = make_grid(cfg);
    const PicardConfig pc = make_picard_config(cfg);
    ModelParams params = cfg.model;

    if (cfg.experiment == "mms") {
        std::string out =
            "solver,study,nodes_coarse,nodes_fine,dt_coarse,dt_fine,error_coarse,"
            "error_fine,ratio\n";
        for (const MmsResult& r : run_mms_suite())
            out += r.solver + "," + r.study + "," + std::to_string(r.nodes_coarse) + "," +
                   std::to_string(r.nodes_fine) + "," + fmt(r.dt_coarse) + "," +
                   fmt(r.dt_fine) + "," + fmt(r.error_coarse) + "," + fmt(r.error_fine) +
                   "," + fmt(r.ratio) + "\n";
        write_text(dir / "mms.csv", out);
        return kExitOk;
    }

    if (cfg.experiment == "compat-roundtrip") {
        params.delta = 0.0;  // the round trip is defined without the shift
        SolverConfig solver;
        solver.rel_tol = cfg.rel_tol;
        solver.max_iterations = cfg.max_iterations;
        std::string out = "nodes,h,err_discrete,err_analytic,c_analytic\n";
        std::vector<double> cs;
        for (const int nodes : {cfg.nodes[0], 2 * (cfg.nodes[0] - 1) + 1}) {
            const GridSpec g = GridSpec::line(nodes, cfg.extent[0]);
            const CompatData data = compat_data(g, params);
            const VectorField g_disc = compute_g(data.u0, data.rho0, data.d0, params);
            const VectorField u_disc =
                solve_initial_velocity(g_disc, data.rho0, data.d0, params, solver);
            const VectorField u_ana =
                solve_initial_velocity(data.g_exact, data.rho0, data.d0, params, solver);
            const double err_d = norm_lq(u_disc - data.u0, 2.0);
            const double err_a = norm_lq(u_ana - data.u0, 2.0);
            const double h = g.spacing(0);
            const double c = err_a / (h * h);
            cs.push_back(c);
            out += std::to_string(nodes) + "," + fmt(h) + "," + fmt(err_d) + "," +
                   fmt(err_a) + "," + fmt(c) + "\n";
        }
        write_text(dir / "compat.csv", out);
        std::string summary = "key,value\n";
        summary += "c_coarse," + fmt(cs[0]) + "\n";
        summary += "c_fine," + fmt(cs[1]) + "\n";
        summary +=
            "c_drift," + fmt(std::abs(cs[0] - cs[1]) / std::max(cs[0], cs[1])) + "\n";
        write_text(dir / "summary.csv", summary);
        return kExitOk;
    }

    if (cfg.experiment == "continuity") {
        const InitialData base = make_initial(cfg, grid);
        const ContinuityResult res =
            continuity_experiment(base, cfg.epsilons, params, pc);
        std::string out = "eps,psi0,psi_sup,d_h1_sup\n";
        for (const ContinuityRow& row : res.rows)
            out += fmt(row.eps) + "," + fmt(row.psi0) + "," + fmt(row.psi_sup) + "," +
                   fmt(row.d_h1_sup) + "\n";
        write_text(dir / "continuity.csv", out);
        std::string summary = "key,value\n";
        summary += "slope," + fmt(res.slope) + "\n";
        summary += "has_control," + std::string(res.has_control ? "1" : "0") + "\n";
        if (res.has_control)
            summary += "control_psi_sup," + fmt(res.control_psi_sup) + "\n";
        write_text(dir / "summary.csv", summary);
        return kExitOk;
    }

    if (cfg.experiment == "smalldata") {
        const auto t0 = std::chrono::steady_clock::now();
        const SmallDataResult res =
            smalldata_experiment(cfg.theta, cfg.alpha, grid, params, pc, cfg.growth_cap);
        const double wall =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        write_text(dir / "sweeps.csv", res.report.csv(false));
        write_text(dir / "norms.csv", norms_csv(res.trajectory));
        std::string summary = "norm,initial,sup,allowed,within\n";
        const auto row = [&](const char* name, double init, double sup) {
            const double allowed = res.growth_cap * init + 1e-12;
            summary += std::string(name) + "," + fmt(init) + "," + fmt(sup) + "," +
                       fmt(allowed) + "," + (sup <= allowed ? "1" : "0") + "\n";
        };
        row("rho_w16", res.initial.rho_w16, res.sup.rho_w16);
        row("rho_t_l6", res.initial.rho_t_l6, res.sup.rho_t_l6);
        row("u_h1", res.initial.u_h1, res.sup.u_h1);
        row("u_grad2_l2", res.initial.u_grad2_l2, res.sup.u_grad2_l2);
        row("sqrt_rho_u_t_l2", res.initial.sqrt_rho_u_t_l2, res.sup.sqrt_rho_u_t_l2);
        row("d_h1", res.initial.d_h1, res.sup.d_h1);
        row("d_t_h1", res.initial.d_t_h1, res.sup.d_t_h1);
        row("d_grad2_l2", res.initial.d_grad2_l2, res.sup.d_grad2_l2);
        row("grad_d_h2", res.initial.grad_d_h2, res.sup.grad_d_h2);
        write_text(dir / "summary.csv", summary +
                                            ("within_cap," +
                                             std::string(res.within_cap ? "1" : "0") + "\n"));
        write_timing(res.report, wall, dir);
        return kExitOk;
    }

    if (cfg.experiment == "delta-sweep") {
        const InitialData data = make_initial(cfg, grid);
        const std::vector<DeltaSweepRow> rows =
            delta_sweep(data, params, pc, cfg.delta_halvings);
        std::string out = "delta,sweeps,psi_final,rho_min,certificate\n";
        for (const DeltaSweepRow& row : rows)
            out += fmt(row.delta) + "," + std::to_string(row.sweeps) + "," +
                   fmt(row.psi_final) + "," + fmt(row.rho_min) + "," +
                   fmt(row.certificate) + "\n";
        write_text(dir / "delta_sweep.csv", out);
        return kExitOk;
    }

    // simulate | picard-report
    const InitialData data = make_initial(cfg, grid);
    const auto t0 = std::chrono::steady_clock::now();
    PicardReport report;
    try {
        auto [traj, rep] = picard_solve(data, params, pc);
        report = rep;
        const double wall =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        write_text(dir / "sweeps.csv", report.csv(false));
        write_text(dir / "summary.csv", run_summary_csv(traj, report));
        if (cfg.experiment == "picard-report") {
            write_text(dir / "sweep_norms.csv", sweep_norms_csv(report));
        } else {
            write_text(dir / "norms.csv", norms_csv(traj));
            write_text(dir / "energy.csv", energy_csv(traj, params));
            write_text(dir / "residuals.csv", residuals_csv(traj, params));
            write_snapshots(cfg, traj, dir);
        }
        write_timing(report, wall, dir);
        return kExitOk;
    } catch (const picard_divergence_error& e) {
        write_text(dir / "sweeps.csv", e.report.csv(false));
        throw;
    } catch (const picard_nonconvergence_error& e) {
        write_text(dir / "sweeps.csv", e.report.csv(false));
        throw;
    }
}

void write_error(const fs::path& dir, const std::string& kind, const std::string& message,
                 int exit_code) {
    nlohmann::json j;
    j["kind"] = kind;
    j["message"] = message;
    j["exit_code"] = exit_code;
    std::ofstream os(dir / "error.json");
    if (os) os << j.dump(2) << "\n";
}

}  // namespace

std::string resolve_out_dir(const RunConfig& cfg, const std::string& cli_out) {
    if (!cli_out.empty()) return cli_out;
    if (!cfg.out_dir.empty()) return cfg.out_dir;
    if (const char* root = std::getenv("ELSIM_OUT_ROOT"); root && *root)
        return (fs::path(root) / "run").string();
    return "out";
}

int run_experiment(const RunConfig& cfg, const std::string& out_dir) {
    const fs::path dir(out_dir);
    try {
        fs::create_directories(dir);
        write_text(dir / "manifest.txt",
                   std::string(version_string()) + "\n\n" + serialize_config(cfg));
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitIo;
    }

    try {
        validate_config(cfg);
        return dispatch(cfg, dir);
    } catch (const config_error& e) {
        write_error(dir, "config", e.what(), kExitConfig);
        return kExitConfig;
    } catch (const picard_divergence_error& e) {
        write_error(dir, "divergence", e.what(), kExitDiverged);
        return kExitDiverged;
    } catch (const picard_nonconvergence_error& e) {
        write_error(dir, "nonconvergence", e.what(), kExitNoConvergence);
        return kExitNoConvergence;
    } catch (const solver_error& e) {
        write_error(dir, "solver", e.what(), kExitDiverged);
        return kExitDiverged;
    } catch (const std::invalid_argument& e) {
        write_error(dir, "config", e.what(), kExitConfig);
        return kExitConfig;
    } catch (const std::domain_error& e) {
        write_error(dir, "config", e.what(), kExitConfig);
        return kExitConfig;
    } catch (const std::logic_error& e) {
        write_error(dir, "assertion", e.what(), kExitDiverged);
        return kExitDiverged;
    } catch (const std::exception& e) {
        write_error(dir, "io", e.what(), kExitIo);
        return kExitIo;
    }
}

}  // namespace elsim
