#include "elsim/transport.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "elsim/operators.hpp"

namespace elsim {

namespace {

void check_boundary_zero(const VectorField& v, const char* what) {
    const GridSpec& g = v.grid();
    for (int ix = 0; ix < g.nodes(0); ++ix)
        for (int iy = 0; iy < g.nodes(1); ++iy) {
            if (!g.on_boundary(ix, iy)) continue;
            const std::int64_t r = g.index(ix, iy);
            for (int c = 0; c < v.components(); ++c)
                if (std::abs(v.value(c, r)) > 1e-12)
                    throw std::invalid_argument(std::string(what) +
                                                " velocity is not zero on the boundary");
        }
}

std::array<double, 2> clamp_point(const GridSpec& g, std::array<double, 2> p) {
    for (int a = 0; a < g.dim(); ++a)
        p[std::size_t(a)] = std::min(std::max(p[std::size_t(a)], 0.0), g.extent(a));
    return p;
}

}  // namespace

VelocitySlab::VelocitySlab(VectorField v_begin_in, VectorField v_end_in, double dt_in)
    : v_begin(std::move(v_begin_in)),
      v_end(std::move(v_end_in)),
      dt(dt_in),
      div_begin(divergence(v_begin)),
      div_end(divergence(v_end)) {
    if (!(v_begin.grid() == v_end.grid()))
        throw std::invalid_argument("slab velocities live on different grids");
    if (v_begin.components() != v_begin.grid().dim() ||
        v_end.components() != v_end.grid().dim())
        throw std::invalid_argument("slab velocities need one component per axis");
    if (!(dt > 0.0) || !std::isfinite(dt))
        throw std::invalid_argument("slab time step must be positive");
    check_boundary_zero(v_begin, "slab begin");
    check_boundary_zero(v_end, "slab end");
}

std::array<double, 2> VelocitySlab::velocity(double s, std::array<double, 2> p) const {
    const double theta = std::min(std::max(s / dt, 0.0), 1.0);
    std::array<double, 2> out{0.0, 0.0};
    for (int a = 0; a < v_begin.grid().dim(); ++a) {
        const double vb = interpolate_component(v_begin, a, p);
        const double ve = interpolate_component(v_end, a, p);
        out[std::size_t(a)] = (1.0 - theta) * vb + theta * ve;
    }
    return out;
}

std::array<double, 2> trace_characteristic(const VelocitySlab& slab,
                                           std::array<double, 2> x) {
    const GridSpec& g = slab.v_begin.grid();
    // One backward midpoint (RK2) step from slab end to slab start.
    const std::array<double, 2> k1 = slab.velocity(slab.dt, x);
    std::array<double, 2> mid = x;
    for (int a = 0; a < g.dim(); ++a)
        mid[std::size_t(a)] -= 0.5 * slab.dt * k1[std::size_t(a)];
    mid = clamp_point(g, mid);
    const std::array<double, 2> k2 = slab.velocity(0.5 * slab.dt, mid);
    std::array<double, 2> foot = x;
    for (int a = 0; a < g.dim(); ++a)
        foot[std::size_t(a)] -= slab.dt * k2[std::size_t(a)];
    return clamp_point(g, foot);
}

ScalarField transport_step(const ScalarField& rho_n, const VelocitySlab& slab) {
    const GridSpec& g = slab.v_begin.grid();
    if (rho_n.components() != 1)
        throw std::invalid_argument("transported density must be a scalar field");
    if (!(rho_n.grid() == g))
        throw std::invalid_argument("density and slab live on different grids");
    ScalarField out(g, 1);
    for (int ix = 0; ix < g.nodes(0); ++ix) {
        for (int iy = 0; iy < g.nodes(1); ++iy) {
            const std::int64_t r = g.index(ix, iy);
            const std::array<double, 2> x{g.coord(0, ix), g.dim() == 2 ? g.coord(1, iy) : 0.0};
            const std::array<double, 2> foot = trace_characteristic(slab, x);
            const double rho_foot = interpolate_component(rho_n, 0, foot);
            // Trapezoid quadrature of div v along the characteristic: the foot
            // value at slab start, the node value at slab end.
            const double div_int = 0.5 * slab.dt *
                                   (interpolate_component(slab.div_begin, 0, foot) +
                                    slab.div_end.value(0, r));
            out.value(0, r) = rho_foot * std::exp(-div_int);
        }
    }
    out.ensure_finite("transported density");
    return out;
}

TransportSolution solve_transport(const ScalarField& rho0,
                                  std::span<const VectorField> velocity,
                                  const TimeGrid& tg) {
    if (rho0.components() != 1)
        throw std::invalid_argument("initial density must be a scalar field");
    if (std::int64_t(velocity.size()) != tg.steps() + 1)
        throw std::invalid_argument("transport needs one velocity field per time level");
    const GridSpec& g = rho0.grid();
    for (const VectorField& v : velocity)
        if (!(v.grid() == g))
            throw std::invalid_argument("transport velocity lives on a different grid");

    TransportSolution sol;
    sol.rho.reserve(std::size_t(tg.steps()) + 1);
    sol.lower_bound.reserve(std::size_t(tg.steps()) + 1);
    sol.rho.push_back(rho0);

    const double rho_min0 = min_value(rho0);
    sol.max_abs_div.resize(velocity.size());
    for (std::size_t k = 0; k < velocity.size(); ++k)
        sol.max_abs_div[k] = max_abs(divergence(velocity[k]));
    const std::vector<double>& max_div = sol.max_abs_div;

    // Accumulated trapezoid exponent; together with the convexity of the
    // interpolation this yields a rigorous discrete floor (up to roundoff).
    double exponent = 0.0;
    sol.lower_bound.push_back(rho_min0 * std::exp(-exponent) - 1e-12);
    for (std::int64_t k = 0; k < tg.steps(); ++k) {
        const VelocitySlab slab(velocity[std::size_t(k)], velocity[std::size_t(k) + 1], tg.dt());
        sol.rho.push_back(transport_step(sol.rho.back(), slab));
        exponent += 0.5 * tg.dt() * (max_div[std::size_t(k)] + max_div[std::size_t(k) + 1]);
        const double bound = rho_min0 * std::exp(-exponent) - 1e-12;
        sol.lower_bound.push_back(bound);
        const double got = min_value(sol.rho.back());
        if (got < bound)
            throw std::logic_error("density positivity certificate violated at level " +
                                   std::to_string(k + 1) + ": min " + std::to_string(got) +
                                   " below bound " + std::to_string(bound));
    }
    return sol;
}

}  // namespace elsim
