#include "elsim/parabolic.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "elsim/operators.hpp"

namespace elsim {

double advective_cfl(const VectorField& v, double dt) {
    if (!(dt > 0.0)) throw std::invalid_argument("CFL time step must be positive");
    return dt * max_abs(v) / v.grid().min_spacing();
}

namespace {

// Advection term (v . grad) f at frozen velocity, one value per component.
Field advect(const VectorField& v, const Field& f) {
    const GridSpec& g = f.grid();
    const int dim = g.dim();
    if (v.components() != dim)
        throw std::invalid_argument("advecting velocity needs one component per axis");
    if (!(v.grid() == g))
        throw std::invalid_argument("advection fields live on different grids");
    const Field grad = gradient(f);
    Field out(g, f.components());
    for (std::int64_t r = 0; r < g.node_count(); ++r)
        for (int c = 0; c < f.components(); ++c) {
            double s = 0.0;
            for (int a = 0; a < dim; ++a)
                s += v.value(a, r) * grad.value(c * dim + a, r);
            out.value(c, r) = s;
        }
    return out;
}

void overwrite_boundary_rows(Field& rhs, const Field& dirichlet) {
    const GridSpec& g = rhs.grid();
    for (int ix = 0; ix < g.nodes(0); ++ix)
        for (int iy = 0; iy < g.nodes(1); ++iy) {
            if (!g.on_boundary(ix, iy)) continue;
            const std::int64_t r = g.index(ix, iy);
            for (int c = 0; c < rhs.components(); ++c)
                rhs.value(c, r) = dirichlet.value(c, r);
        }
}

}  // namespace

std::vector<VectorField> heat_flow(const VectorField& u0, const TimeGrid& tg,
                                   const SolverConfig& solver, double diffusivity,
                                   long* iterations) {
    if (!(diffusivity > 0.0) || !std::isfinite(diffusivity))
        throw std::invalid_argument("heat flow diffusivity must be positive");
    const GridSpec& g = u0.grid();
    for (int ix = 0; ix < g.nodes(0); ++ix)
        for (int iy = 0; iy < g.nodes(1); ++iy) {
            if (!g.on_boundary(ix, iy)) continue;
            for (int c = 0; c < u0.components(); ++c)
                if (std::abs(u0.value(c, g.index(ix, iy))) > 1e-12)
                    throw std::invalid_argument(
                        "heat flow data must vanish on the boundary");
        }
    ScalarField ones(g, 1);
    for (std::int64_t r = 0; r < g.node_count(); ++r) ones.value(0, r) = 1.0;
    const Field zero_bc(g, u0.components());
    const LinearOperatorSpec op(ones, diffusivity * tg.dt(), zero_bc);

    std::vector<VectorField> levels;
    levels.reserve(std::size_t(tg.steps()) + 1);
    levels.push_back(u0);
    long total = 0;
    for (std::int64_t k = 0; k < tg.steps(); ++k) {
        Field rhs = levels.back();
        overwrite_boundary_rows(rhs, zero_bc);
        SolverStats st;
        levels.push_back(spd_solve(op, rhs, solver, &st, &levels.back()));
        total += st.iterations;
    }
    if (iterations) *iterations = total;
    return levels;
}

DirectorField director_step(const DirectorField& d_n, const VectorField& v_n,
                            const DirectorField& n_mid, const ModelParams& params,
                            double dt, const SolverConfig& solver,
                            const DirectorField* forcing, SolverStats* stats) {
    const GridSpec& g = d_n.grid();
    if (d_n.components() != 3 || n_mid.components() != 3)
        throw std::invalid_argument("director fields must have 3 components");
    if (!(n_mid.grid() == g))
        throw std::invalid_argument("director step fields live on different grids");
    if (!(dt > 0.0) || !std::isfinite(dt))
        throw std::invalid_argument("director step needs a positive dt");
    if (forcing && (!(forcing->grid() == g) || forcing->components() != 3))
        throw std::invalid_argument("director forcing has the wrong shape");

    const Field adv = advect(v_n, d_n);
    const DirectorField gl = gl_linearized(n_mid, d_n, params.m, params.sigma);
    Field rhs(g, 3);
    for (std::int64_t r = 0; r < g.node_count(); ++r)
        for (int c = 0; c < 3; ++c) {
            double v = d_n.value(c, r) - dt * adv.value(c, r) -
                       dt * params.nu * gl.value(c, r);
            if (forcing) v += dt * forcing->value(c, r);
            rhs.value(c, r) = v;
        }
    overwrite_boundary_rows(rhs, d_n);

    ScalarField ones(g, 1);
    for (std::int64_t r = 0; r < g.node_count(); ++r) ones.value(0, r) = 1.0;
    const LinearOperatorSpec op(ones, params.nu * dt, d_n);
    return spd_solve(op, rhs, solver, stats, &d_n);
}

VectorField momentum_step(const ScalarField& rho_np1, const VectorField& u_n,
                          const VectorField& v_n, const DirectorField& d_n,
                          const ModelParams& params, double dt, double rho_floor,
                          const SolverConfig& solver, const VectorField* forcing,
                          SolverStats* stats) {
    const GridSpec& g = u_n.grid();
    const int dim = g.dim();
    if (rho_np1.components() != 1)
        throw std::invalid_argument("momentum density must be a scalar field");
    if (u_n.components() != dim || v_n.components() != dim)
        throw std::invalid_argument("momentum velocities need one component per axis");
    if (!(rho_np1.grid() == g) || !(v_n.grid() == g) || !(d_n.grid() == g))
        throw std::invalid_argument("momentum step fields live on different grids");
    if (!(dt > 0.0) || !std::isfinite(dt))
        throw std::invalid_argument("momentum step needs a positive dt");
    if (!(rho_floor > 0.0))
        throw std::invalid_argument("momentum step needs a positive density floor");
    if (min_value(rho_np1) < rho_floor)
        throw std::invalid_argument("density fell below the positivity floor " +
                                    std::to_string(rho_floor) +
                                    "; the vacuum shift delta is required");
    if (forcing && (!(forcing->grid() == g) || forcing->components() != dim))
        throw std::invalid_argument("momentum forcing has the wrong shape");

    const Field adv = advect(v_n, u_n);
    const VectorField grad_p = gradient(pressure(rho_np1, params.pressure));
    const VectorField elastic = elastic_force(d_n, params);

    ScalarField mass(g, 1);
    for (std::int64_t r = 0; r < g.node_count(); ++r)
        mass.value(0, r) = rho_np1.value(0, r) / dt;

    Field rhs(g, dim);
    for (std::int64_t r = 0; r < g.node_count(); ++r)
        for (int c = 0; c < dim; ++c) {
            double v = mass.value(0, r) * u_n.value(c, r) -
                       rho_np1.value(0, r) * adv.value(c, r) - grad_p.value(c, r) +
                       elastic.value(c, r);
            if (forcing) v += forcing->value(c, r);
            rhs.value(c, r) = v;
        }
    const Field zero_bc(g, dim);
    overwrite_boundary_rows(rhs, zero_bc);

    const LinearOperatorSpec op(mass, params.mu, zero_bc);
    return spd_solve(op, rhs, solver, stats, &u_n);
}

VectorField solve_initial_velocity(const VectorField& g, const ScalarField& rho0,
                                   const DirectorField& d0, const ModelParams& params,
                                   const SolverConfig& solver) {
    const GridSpec& gr = rho0.grid();
    const int dim = gr.dim();
    if (g.components() != dim)
        throw std::invalid_argument("compatibility source needs one component per axis");
    if (!(g.grid() == gr) || !(d0.grid() == gr))
        throw std::invalid_argument("initial velocity fields live on different grids");

    ScalarField rho_shift(gr, 1);
    for (std::int64_t r = 0; r < gr.node_count(); ++r)
        rho_shift.value(0, r) = rho0.value(0, r) + params.delta;
    if (min_value(rho_shift) < 0.0)
        throw std::invalid_argument("shifted density is negative");

    const VectorField grad_p = gradient(pressure(rho_shift, params.pressure));
    const VectorField div_s = divergence_tensor(ericksen_stress(d0, params.sigma));

    // mu lap u = sqrt(rho0 + delta) g + grad p + lambda div S, written as the
    // SPD system (-mu lap) u = -(...).
    Field rhs(gr, dim);
    for (std::int64_t r = 0; r < gr.node_count(); ++r)
        for (int c = 0; c < dim; ++c)
            rhs.value(c, r) = -(std::sqrt(rho_shift.value(0, r)) * g.value(c, r) +
                                grad_p.value(c, r) + params.lambda * div_s.value(c, r));
    const Field zero_bc(gr, dim);
    overwrite_boundary_rows(rhs, zero_bc);
    const LinearOperatorSpec op(ScalarField(gr, 1), params.mu, zero_bc);
    return spd_solve(op, rhs, solver, nullptr, nullptr);
}

VectorField compute_g(const VectorField& u0, const ScalarField& rho0,
                      const DirectorField& d0, const ModelParams& params,
                      double rho_min) {
    const GridSpec& g = rho0.grid();
    const int dim = g.dim();
    if (u0.components() != dim)
        throw std::invalid_argument("initial velocity needs one component per axis");
    if (!(u0.grid() == g) || !(d0.grid() == g))
        throw std::invalid_argument("compatibility fields live on different grids");
    if (!(rho_min > 0.0))
        throw std::invalid_argument("compatibility density floor must be positive");
    for (int ix = 0; ix < g.nodes(0); ++ix)
        for (int iy = 0; iy < g.nodes(1); ++iy) {
            const std::int64_t r = g.index(ix, iy);
            if (rho0.value(0, r) < rho_min)
                throw std::invalid_argument(
                    "compatibility source undefined: density " +
                    std::to_string(rho0.value(0, r)) + " below " + std::to_string(rho_min) +
                    " at node (" + std::to_string(ix) + ", " + std::to_string(iy) + ")");
        }

    const Field lap_u = laplacian(u0);
    const VectorField div_s = divergence_tensor(ericksen_stress(d0, params.sigma));
    const VectorField grad_p = gradient(pressure(rho0, params.pressure));
    VectorField out(g, dim);
    for (std::int64_t r = 0; r < g.node_count(); ++r) {
        const double w = 1.0 / std::sqrt(rho0.value(0, r));
        for (int c = 0; c < dim; ++c)
            out.value(c, r) = w * (params.mu * lap_u.value(c, r) -
                                   params.lambda * div_s.value(c, r) - grad_p.value(c, r));
    }
    out.ensure_finite("compatibility source");
    return out;
}

}  // namespace elsim
