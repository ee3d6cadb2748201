#include "elsim/linear_solver.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace elsim {

LinearOperatorSpec::LinearOperatorSpec(ScalarField mass_in, double diffusion_in,
                                       Field dirichlet_in)
    : mass(std::move(mass_in)), diffusion(diffusion_in), dirichlet(std::move(dirichlet_in)) {
    if (mass.components() != 1)
        throw std::invalid_argument("operator mass coefficient must be a scalar field");
    if (!(mass.grid() == dirichlet.grid()))
        throw std::invalid_argument("operator mass and boundary data live on different grids");
    if (!(diffusion >= 0.0) || !std::isfinite(diffusion))
        throw std::invalid_argument("operator diffusion coefficient must be nonnegative");
    if (min_value(mass) < 0.0)
        throw std::invalid_argument("operator mass coefficient must be nonnegative");
    if (diffusion == 0.0 && !(min_value(mass) > 0.0))
        throw std::invalid_argument("operator needs positive diffusion or strictly positive mass");
}

namespace {

struct Stencil {
    const GridSpec* g = nullptr;
    const double* mass = nullptr;
    double diff = 0.0;
    std::array<double, 2> invh2{0.0, 0.0};

    // y = A x on interior rows; x carries fixed boundary values.
    void apply(const std::vector<double>& x, std::vector<double>& y) const {
        const int nx = g->nodes(0);
        const int ny = g->nodes(1);
        const std::int64_t sx = ny;
        for (int ix = 1; ix < nx - 1; ++ix) {
            for (int iy = (g->dim() == 2 ? 1 : 0); iy < (g->dim() == 2 ? ny - 1 : 1); ++iy) {
                const std::int64_t r = g->index(ix, iy);
                double v = mass[r] * x[std::size_t(r)];
                v += diff * invh2[0] *
                     (2.0 * x[std::size_t(r)] - x[std::size_t(r - sx)] - x[std::size_t(r + sx)]);
                if (g->dim() == 2)
                    v += diff * invh2[1] *
                         (2.0 * x[std::size_t(r)] - x[std::size_t(r - 1)] - x[std::size_t(r + 1)]);
                y[std::size_t(r)] = v;
            }
        }
    }

    double diag(std::int64_t r) const {
        double v = mass[r] + diff * 2.0 * invh2[0];
        if (g->dim() == 2) v += diff * 2.0 * invh2[1];
        return v;
    }
};

double dot_interior(const GridSpec& g, const std::vector<double>& a,
                    const std::vector<double>& b) {
    double s = 0.0;
    const int nx = g.nodes(0);
    const int ny = g.nodes(1);
    for (int ix = 1; ix < nx - 1; ++ix)
        for (int iy = (g.dim() == 2 ? 1 : 0); iy < (g.dim() == 2 ? ny - 1 : 1); ++iy) {
            const std::size_t r = std::size_t(g.index(ix, iy));
            s += a[r] * b[r];
        }
    return s;
}

}  // namespace

Field spd_solve(const LinearOperatorSpec& op, const Field& rhs, const SolverConfig& cfg,
                SolverStats* stats, const Field* initial_guess) {
    const GridSpec& g = op.mass.grid();
    if (!(rhs.grid() == g))
        throw std::invalid_argument("solver rhs lives on a different grid");
    if (rhs.components() != op.dirichlet.components())
        throw std::invalid_argument("solver rhs and boundary data component counts differ");
    if (initial_guess && (!(initial_guess->grid() == g) ||
                          initial_guess->components() != rhs.components()))
        throw std::invalid_argument("solver initial guess has the wrong shape");
    if (!(cfg.rel_tol > 0.0))
        throw std::invalid_argument("solver relative tolerance must be positive");

    const std::int64_t n = g.node_count();
    const std::int64_t max_iter =
        cfg.max_iterations > 0 ? cfg.max_iterations : 10 * n;

    Stencil A;
    A.g = &g;
    A.mass = op.mass.component(0).data();
    A.diff = op.diffusion;
    A.invh2[0] = 1.0 / (g.spacing(0) * g.spacing(0));
    if (g.dim() == 2) A.invh2[1] = 1.0 / (g.spacing(1) * g.spacing(1));

    // Residual target uses the full-system rhs norm: interior rows keep the
    // supplied rhs, boundary rows carry the Dirichlet values (identity rows).
    double rhs_norm2 = 0.0;
    for (int c = 0; c < rhs.components(); ++c) {
        for (int ix = 0; ix < g.nodes(0); ++ix)
            for (int iy = 0; iy < g.nodes(1); ++iy) {
                const std::int64_t r = g.index(ix, iy);
                const double b = g.on_boundary(ix, iy) ? op.dirichlet.value(c, r)
                                                       : rhs.value(c, r);
                rhs_norm2 += b * b;
            }
    }
    const double target = cfg.rel_tol * std::sqrt(rhs_norm2);

    Field x_out(g, rhs.components());
    SolverStats local;
    const std::size_t un = std::size_t(n);
    std::vector<double> x(un), r(un), z(un), p(un), Ap(un);

    for (int c = 0; c < rhs.components(); ++c) {
        // Seed with the guess (or zero) and pin boundary entries.
        for (std::int64_t i = 0; i < n; ++i)
            x[std::size_t(i)] = initial_guess ? initial_guess->value(c, i) : 0.0;
        for (int ix = 0; ix < g.nodes(0); ++ix)
            for (int iy = 0; iy < g.nodes(1); ++iy)
                if (g.on_boundary(ix, iy))
                    x[std::size_t(g.index(ix, iy))] = op.dirichlet.value(c, g.index(ix, iy));

        std::fill(r.begin(), r.end(), 0.0);
        std::fill(p.begin(), p.end(), 0.0);
        std::fill(Ap.begin(), Ap.end(), 0.0);
        A.apply(x, Ap);
        for (int ix = 1; ix < g.nodes(0) - 1; ++ix)
            for (int iy = (g.dim() == 2 ? 1 : 0); iy < (g.dim() == 2 ? g.nodes(1) - 1 : 1); ++iy) {
                const std::size_t rr = std::size_t(g.index(ix, iy));
                r[rr] = rhs.value(c, std::int64_t(rr)) - Ap[rr];
            }

        double res = std::sqrt(dot_interior(g, r, r));
        const std::size_t comp_start = local.residual_history.size();
        local.residual_history.push_back(res);
        double rz = 0.0;
        bool first = true;
        std::int64_t iter = 0;
        while (res > target) {
            if (iter >= max_iter) {
                SolverStats fail = local;
                throw solver_error("linear solve hit the iteration cap with residual " +
                                       std::to_string(res) + " (target " +
                                       std::to_string(target) + ")",
                                   fail.residual_history);
            }
            // Jacobi preconditioning.
            for (int ix = 1; ix < g.nodes(0) - 1; ++ix)
                for (int iy = (g.dim() == 2 ? 1 : 0);
                     iy < (g.dim() == 2 ? g.nodes(1) - 1 : 1); ++iy) {
                    const std::int64_t rr = g.index(ix, iy);
                    z[std::size_t(rr)] = r[std::size_t(rr)] / A.diag(rr);
                }
            const double rz_new = dot_interior(g, r, z);
            if (first) {
                p = z;
                first = false;
            } else {
                const double beta = rz_new / rz;
                const int nx = g.nodes(0), ny = g.nodes(1);
                for (int ix = 1; ix < nx - 1; ++ix)
                    for (int iy = (g.dim() == 2 ? 1 : 0);
                         iy < (g.dim() == 2 ? ny - 1 : 1); ++iy) {
                        const std::size_t rr = std::size_t(g.index(ix, iy));
                        p[rr] = z[rr] + beta * p[rr];
                    }
            }
            rz = rz_new;
            A.apply(p, Ap);
            const double pAp = dot_interior(g, p, Ap);
            if (!(pAp > 0.0))
                throw solver_error("linear operator lost positive definiteness",
                                   local.residual_history);
            const double alpha = rz / pAp;
            const int nx = g.nodes(0), ny = g.nodes(1);
            for (int ix = 1; ix < nx - 1; ++ix)
                for (int iy = (g.dim() == 2 ? 1 : 0); iy < (g.dim() == 2 ? ny - 1 : 1); ++iy) {
                    const std::size_t rr = std::size_t(g.index(ix, iy));
                    x[rr] += alpha * p[rr];
                    r[rr] -= alpha * Ap[rr];
                }
            res = std::sqrt(dot_interior(g, r, r));
            ++iter;
            local.residual_history.push_back(res);
            // Stagnation guard: meaningful progress expected over each window.
            const std::size_t hist = local.residual_history.size();
            if (cfg.stagnation_window > 0 &&
                hist - comp_start > std::size_t(cfg.stagnation_window)) {
                const double before =
                    local.residual_history[hist - 1 - std::size_t(cfg.stagnation_window)];
                if (res > cfg.stagnation_factor * before)
                    throw solver_error("linear solve stagnated at residual " +
                                           std::to_string(res),
                                       local.residual_history);
            }
        }
        local.iterations += iter;
        for (std::int64_t i = 0; i < n; ++i) x_out.value(c, i) = x[std::size_t(i)];
    }

    x_out.ensure_finite("linear solve result");
    local.final_residual = local.residual_history.empty() ? 0.0 : local.residual_history.back();
    if (stats) *stats = std::move(local);
    return x_out;
}

}  // namespace elsim
