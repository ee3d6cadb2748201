#include "elsim/picard.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <string>

#include "elsim/norms.hpp"
#include "elsim/operators.hpp"
#include "elsim/parabolic.hpp"
#include "elsim/transport.hpp"

namespace elsim {

void PicardConfig::validate() const {
    if (!(psi_tol > 0.0) || !std::isfinite(psi_tol))
        throw std::invalid_argument("psi tolerance must be positive");
    if (max_sweeps < 2)
        throw std::invalid_argument("at least two sweeps are needed to measure a distance");
    if (divergence_patience < 1)
        throw std::invalid_argument("divergence patience must be at least 1");
    if (!(cfl_warn > 0.0) || !(cfl_error >= cfl_warn))
        throw std::invalid_argument("CFL thresholds must satisfy 0 < warn <= error");
    if (!(solver.rel_tol > 0.0))
        throw std::invalid_argument("solver relative tolerance must be positive");
}

InitialData::InitialData(ScalarField rho0_in, VectorField u0_in, DirectorField d0_in,
                         std::optional<VectorField> g_in)
    : rho0(std::move(rho0_in)), u0(std::move(u0_in)), d0(std::move(d0_in)),
      g(std::move(g_in)) {
    const GridSpec& gr = rho0.grid();
    if (rho0.components() != 1)
        throw std::invalid_argument("initial density must be a scalar field");
    if (!(u0.grid() == gr) || !(d0.grid() == gr))
        throw std::invalid_argument("initial fields live on different grids");
    if (u0.components() != gr.dim())
        throw std::invalid_argument("initial velocity needs one component per axis");
    if (d0.components() != 3)
        throw std::invalid_argument("initial director must have 3 components");
    if (min_value(rho0) < 0.0)
        throw std::invalid_argument("initial density must be nonnegative");
    if (g) {
        if (!(g->grid() == gr) || g->components() != gr.dim())
            throw std::invalid_argument("compatibility source has the wrong shape");
    }
    for (int ix = 0; ix < gr.nodes(0); ++ix)
        for (int iy = 0; iy < gr.nodes(1); ++iy) {
            if (!gr.on_boundary(ix, iy)) continue;
            const std::int64_t r = gr.index(ix, iy);
            for (int c = 0; c < gr.dim(); ++c)
                if (std::abs(u0.value(c, r)) > 1e-12)
                    throw std::invalid_argument(
                        "initial velocity must vanish on the boundary");
            double mag2 = 0.0;
            for (int c = 0; c < 3; ++c) mag2 += d0.value(c, r) * d0.value(c, r);
            if (std::abs(std::sqrt(mag2) - 1.0) > 1e-12)
                throw std::invalid_argument(
                    "initial director must be unit length on the boundary");
        }
}

double psi_distance(const FluidState& a, const FluidState& b) {
    if (!(a.rho.grid() == b.rho.grid()))
        throw std::invalid_argument("psi distance between states on different grids");
    const double dr = norm_lq(a.rho - b.rho, 2.0);
    const Field dd = a.d - b.d;
    const double dn = norm_lq(dd, 2.0);
    const double dg = norm_lq(gradient(dd), 2.0);
    const double du = weighted_l2(a.rho, a.u - b.u);
    return dr * dr + dn * dn + dg * dg + du * du;
}

std::pair<std::vector<VectorField>, std::vector<DirectorField>>
initial_iterates(const InitialData& data, const TimeGrid& tg, const SolverConfig& solver) {
    std::vector<VectorField> v = heat_flow(data.u0, tg, solver);
    std::vector<DirectorField> n(std::size_t(tg.steps()) + 1, data.d0);
    return {std::move(v), std::move(n)};
}

namespace {

void check_iterate_preconditions(const InitialData& data,
                                 const std::vector<VectorField>& v,
                                 const std::vector<DirectorField>& n,
                                 const TimeGrid& tg) {
    if (std::int64_t(v.size()) != tg.steps() + 1 ||
        std::int64_t(n.size()) != tg.steps() + 1)
        throw std::invalid_argument("frozen iterates need steps + 1 levels");
    const GridSpec& gr = data.rho0.grid();
    for (const VectorField& f : v)
        if (!(f.grid() == gr) || f.components() != gr.dim())
            throw std::invalid_argument("frozen velocity has the wrong shape");
    for (const DirectorField& f : n)
        if (!(f.grid() == gr) || f.components() != 3)
            throw std::invalid_argument("frozen director has the wrong shape");
    if (max_abs_diff(v.front(), data.u0) > 1e-12)
        throw std::invalid_argument("frozen velocity must start from u0");
    if (max_abs_diff(n.front(), data.d0) > 1e-12)
        throw std::invalid_argument("frozen director must start from d0");
    for (std::size_t k = 0; k < n.size(); ++k)
        for (int ix = 0; ix < gr.nodes(0); ++ix)
            for (int iy = 0; iy < gr.nodes(1); ++iy) {
                if (!gr.on_boundary(ix, iy)) continue;
                const std::int64_t r = gr.index(ix, iy);
                for (int c = 0; c < 3; ++c)
                    if (std::abs(n[k].value(c, r) - data.d0.value(c, r)) > 1e-12)
                        throw std::invalid_argument(
                            "frozen director must carry the initial boundary data");
            }
}

}  // namespace

Trajectory solve_linearized(const InitialData& data, const std::vector<VectorField>& v,
                            const std::vector<DirectorField>& n, const ModelParams& params,
                            const PicardConfig& cfg, LinearizedStats* stats,
                            const LinearizedForcing* forcing) {
    const TimeGrid& tg = cfg.time;
    check_iterate_preconditions(data, v, n, tg);
    const GridSpec& gr = data.rho0.grid();
    const double dt = tg.dt();

    // Density: delta-shifted transport along the frozen velocity.
    ScalarField rho_start(gr, 1);
    for (std::int64_t r = 0; r < gr.node_count(); ++r)
        rho_start.value(0, r) = data.rho0.value(0, r) + params.delta;
    const TransportSolution ts = solve_transport(rho_start, v, tg);

    LinearizedStats local;
    for (std::int64_t k = 0; k < tg.steps(); ++k) {
        const double cfl = advective_cfl(v[std::size_t(k)], dt);
        local.cfl_max = std::max(local.cfl_max, cfl);
        if (cfl > cfg.cfl_error)
            throw solver_error("advective CFL " + std::to_string(cfl) +
                                   " exceeds the abort threshold " +
                                   std::to_string(cfg.cfl_error),
                               {});
        if (cfl > cfg.cfl_warn) local.cfl_warning = true;
    }

    // Director sweep.
    std::vector<DirectorField> d;
    d.reserve(std::size_t(tg.steps()) + 1);
    d.push_back(data.d0);
    for (std::int64_t k = 0; k < tg.steps(); ++k) {
        DirectorField src(gr, 3);
        const DirectorField* fptr = nullptr;
        if (forcing && forcing->director) {
            src = forcing->director(tg.time(k));
            fptr = &src;
        }
        SolverStats st;
        d.push_back(director_step(d.back(), v[std::size_t(k)], n[std::size_t(k)], params,
                                  dt, cfg.solver, fptr, &st));
        local.solver_iterations += st.iterations;
    }

    // Momentum sweep against the new density and director.
    std::vector<VectorField> u;
    u.reserve(std::size_t(tg.steps()) + 1);
    u.push_back(data.u0);
    for (std::int64_t k = 0; k < tg.steps(); ++k) {
        const double floor = ts.lower_bound[std::size_t(k) + 1];
        if (!(floor > 0.0))
            throw std::invalid_argument(
                "certified density floor is not positive; a positive vacuum shift "
                "delta is required for this data");
        VectorField src(gr, gr.dim());
        const VectorField* fptr = nullptr;
        if (forcing && forcing->momentum) {
            src = forcing->momentum(tg.time(k));
            fptr = &src;
        }
        SolverStats st;
        u.push_back(momentum_step(ts.rho[std::size_t(k) + 1], u.back(), v[std::size_t(k)],
                                  d[std::size_t(k)], params, dt, floor, cfg.solver, fptr,
                                  &st));
        local.solver_iterations += st.iterations;
    }

    std::vector<FluidState> states;
    states.reserve(std::size_t(tg.steps()) + 1);
    for (std::int64_t k = 0; k <= tg.steps(); ++k)
        states.emplace_back(ts.rho[std::size_t(k)], u[std::size_t(k)], d[std::size_t(k)],
                            tg.time(k));
    if (stats) *stats = local;
    return Trajectory(tg, std::move(states));
}

std::pair<Trajectory, PicardReport> picard_solve(const InitialData& data,
                                                 const ModelParams& params,
                                                 const PicardConfig& cfg) {
    params.validate();
    cfg.validate();

    auto [v, n] = initial_iterates(data, cfg.time, cfg.solver);
    PicardReport report;
    report.delta = params.delta;

    std::optional<Trajectory> prev;
    double prev_psi = 0.0;
    bool have_prev_psi = false;
    int bad_streak = 0;

    for (int sweep = 1; sweep <= cfg.max_sweeps; ++sweep) {
        const auto t0 = std::chrono::steady_clock::now();
        LinearizedStats st;
        Trajectory traj = solve_linearized(data, v, n, params, cfg, &st);

        SweepRecord rec;
        rec.sweep = sweep;
        rec.solver_iterations = st.solver_iterations;
        rec.cfl_max = st.cfl_max;
        rec.cfl_warning = st.cfl_warning;

        if (prev) {
            double psi_sup = 0.0;
            for (std::int64_t k = 0; k <= cfg.time.steps(); ++k)
                psi_sup = std::max(psi_sup, psi_distance(traj.at(k), prev->at(k)));
            rec.has_psi = true;
            rec.psi_sup = psi_sup;
            report.psi_cumulative += psi_sup;
            if (have_prev_psi) {
                rec.has_ratio = true;
                if (prev_psi > 0.0)
                    rec.ratio = psi_sup / prev_psi;
                else
                    rec.ratio = psi_sup > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
            }
            prev_psi = psi_sup;
            have_prev_psi = true;
        }

        if (cfg.collect_norms)
            report.sweep_norm_sup.push_back(norm_sup(monitor_norms(traj)));

        rec.wall_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        report.sweeps.push_back(rec);

        if (rec.has_psi && rec.psi_sup < cfg.psi_tol) {
            report.termination = "converged";
            return {std::move(traj), std::move(report)};
        }
        if (rec.has_ratio) {
            if (rec.ratio >= 1.0)
                ++bad_streak;
            else
                bad_streak = 0;
            if (bad_streak >= cfg.divergence_patience) {
                report.termination = "diverged";
                throw picard_divergence_error(
                    "outer iteration diverged: " + std::to_string(bad_streak) +
                        " consecutive non-contracting sweeps",
                    std::move(report));
            }
        }

        for (std::int64_t k = 0; k <= cfg.time.steps(); ++k) {
            v[std::size_t(k)] = traj.at(k).u;
            n[std::size_t(k)] = traj.at(k).d;
        }
        prev = std::move(traj);
    }

    report.termination = "max_sweeps";
    throw picard_nonconvergence_error(
        "outer iteration did not reach the tolerance within " +
            std::to_string(cfg.max_sweeps) + " sweeps",
        std::move(report));
}

namespace {

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

std::string PicardReport::csv(bool include_wall_time) const {
    std::string out = "sweep,psi_sup,ratio,solver_iterations,cfl_max";
    if (include_wall_time) out += ",wall_seconds";
    out += '\n';
    for (const SweepRecord& rec : sweeps) {
        out += std::to_string(rec.sweep);
        out += ',';
        if (rec.has_psi) out += fmt(rec.psi_sup);
        out += ',';
        if (rec.has_ratio) out += fmt(rec.ratio);
        out += ',';
        out += std::to_string(rec.solver_iterations);
        out += ',';
        out += fmt(rec.cfl_max);
        if (include_wall_time) {
            out += ',';
            out += fmt(rec.wall_seconds);
        }
        out += '\n';
    }
    return out;
}

ResidualSeries nonlinear_residual(const Trajectory& traj, const ModelParams& params) {
    const TimeGrid& tg = traj.time_grid;
    const GridSpec& gr = traj.at(0).rho.grid();
    const int dim = gr.dim();
    const double dt = tg.dt();
    ResidualSeries out;
    if (tg.steps() < 2) return out;

    auto zero_boundary = [&](Field& f) {
        for (int ix = 0; ix < gr.nodes(0); ++ix)
            for (int iy = 0; iy < gr.nodes(1); ++iy) {
                if (!gr.on_boundary(ix, iy)) continue;
                const std::int64_t r = gr.index(ix, iy);
                for (int c = 0; c < f.components(); ++c) f.value(c, r) = 0.0;
            }
    };

    for (std::int64_t k = 1; k < tg.steps(); ++k) {
        const FluidState& sm = traj.at(k - 1);
        const FluidState& s0 = traj.at(k);
        const FluidState& sp = traj.at(k + 1);

        // Continuity: rho_t + div(rho u).
        VectorField flux(gr, dim);
        for (std::int64_t r = 0; r < gr.node_count(); ++r)
            for (int c = 0; c < dim; ++c)
                flux.value(c, r) = s0.rho.value(0, r) * s0.u.value(c, r);
        ScalarField r_cont = divergence(flux);
        for (std::int64_t r = 0; r < gr.node_count(); ++r)
            r_cont.value(0, r) +=
                (sp.rho.value(0, r) - sm.rho.value(0, r)) / (2.0 * dt);
        zero_boundary(r_cont);

        // Momentum: (rho u)_t + div(rho u x u) + grad p - mu lap u + lambda div S.
        VectorField r_mom(gr, dim);
        for (int c = 0; c < dim; ++c) {
            for (std::int64_t r = 0; r < gr.node_count(); ++r) {
                const double mp = sp.rho.value(0, r) * sp.u.value(c, r);
                const double mm = sm.rho.value(0, r) * sm.u.value(c, r);
                r_mom.value(c, r) = (mp - mm) / (2.0 * dt);
            }
            for (int a = 0; a < dim; ++a) {
                ScalarField fa(gr, 1);
                for (std::int64_t r = 0; r < gr.node_count(); ++r)
                    fa.value(0, r) =
                        s0.rho.value(0, r) * s0.u.value(a, r) * s0.u.value(c, r);
                const Field dfa = partial(fa, a);
                for (std::int64_t r = 0; r < gr.node_count(); ++r)
                    r_mom.value(c, r) += dfa.value(0, r);
            }
        }
        const VectorField grad_p = gradient(pressure(s0.rho, params.pressure));
        const Field lap_u = laplacian(s0.u);
        const VectorField div_s = divergence_tensor(ericksen_stress(s0.d, params.sigma));
        for (std::int64_t r = 0; r < gr.node_count(); ++r)
            for (int c = 0; c < dim; ++c)
                r_mom.value(c, r) += grad_p.value(c, r) - params.mu * lap_u.value(c, r) +
                                     params.lambda * div_s.value(c, r);
        zero_boundary(r_mom);

        // Director: d_t + (u . grad) d - nu lap d + nu f(d).
        const Field grad_d = gradient(s0.d);
        const Field lap_d = laplacian(s0.d);
        const DirectorField f_d = gl_force(s0.d, params.sigma);
        DirectorField r_dir(gr, 3);
        for (std::int64_t r = 0; r < gr.node_count(); ++r)
            for (int c = 0; c < 3; ++c) {
                double v = (sp.d.value(c, r) - sm.d.value(c, r)) / (2.0 * dt);
                for (int a = 0; a < dim; ++a)
                    v += s0.u.value(a, r) * grad_d.value(c * dim + a, r);
                v += -params.nu * lap_d.value(c, r) + params.nu * f_d.value(c, r);
                r_dir.value(c, r) = v;
            }
        zero_boundary(r_dir);

        out.time.push_back(s0.time);
        out.continuity.push_back(norm_lq(r_cont, 2.0));
        out.momentum.push_back(norm_lq(r_mom, 2.0));
        out.director.push_back(norm_lq(r_dir, 2.0));
    }
    return out;
}

}  // namespace elsim
