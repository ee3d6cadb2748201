#include "elsim/norms.hpp"

#include <cmath>
#include <stdexcept>

#include "elsim/operators.hpp"

namespace elsim {

namespace {

double trapezoid_weight(const GridSpec& g, int ix, int iy) {
    double w = (ix == 0 || ix == g.nodes(0) - 1) ? 0.5 : 1.0;
    if (g.dim() == 2) w *= (iy == 0 || iy == g.nodes(1) - 1) ? 0.5 : 1.0;
    return w;
}

double cell_volume(const GridSpec& g) {
    double v = g.spacing(0);
    if (g.dim() == 2) v *= g.spacing(1);
    return v;
}

// Trapezoid-weighted sum of |f|^q over the grid (the q-th power of the Lq
// norm).  Magnitude is Euclidean across components.  q == 2 avoids pow so the
// weighted norm with unit density reproduces it bitwise.
double power_sum(const Field& f, double q) {
    const GridSpec& g = f.grid();
    double sum = 0.0;
    for (int ix = 0; ix < g.nodes(0); ++ix) {
        for (int iy = 0; iy < g.nodes(1); ++iy) {
            const std::int64_t r = g.index(ix, iy);
            double mag2 = 0.0;
            for (int c = 0; c < f.components(); ++c) {
                const double v = f.value(c, r);
                mag2 += v * v;
            }
            const double w = trapezoid_weight(g, ix, iy);
            if (q == 2.0)
                sum += w * mag2;
            else
                sum += w * std::pow(std::sqrt(mag2), q);
        }
    }
    return cell_volume(g) * sum;
}

double max_magnitude(const Field& f) {
    const GridSpec& g = f.grid();
    double best = 0.0;
    for (std::int64_t r = 0; r < g.node_count(); ++r) {
        double mag2 = 0.0;
        for (int c = 0; c < f.components(); ++c) {
            const double v = f.value(c, r);
            mag2 += v * v;
        }
        best = std::max(best, mag2);
    }
    return std::sqrt(best);
}

void check_exponent(double q) {
    if (q == kInfNorm) return;
    if (!(q >= 1.0))
        throw std::invalid_argument("norm exponent must be >= 1 or infinity");
}

}  // namespace

double norm_lq(const Field& f, double q) {
    check_exponent(q);
    if (q == kInfNorm) return max_magnitude(f);
    if (q == 2.0) return std::sqrt(power_sum(f, 2.0));
    return std::pow(power_sum(f, q), 1.0 / q);
}

double norm_w1q(const Field& f, double q) {
    check_exponent(q);
    if (q == kInfNorm) {
        double best = max_magnitude(f);
        for (int a = 0; a < f.grid().dim(); ++a)
            best = std::max(best, max_magnitude(partial(f, a)));
        return best;
    }
    double sum = power_sum(f, q);
    for (int a = 0; a < f.grid().dim(); ++a) sum += power_sum(partial(f, a), q);
    if (q == 2.0) return std::sqrt(sum);
    return std::pow(sum, 1.0 / q);
}

double norm_h1(const Field& f) {
    double sum = power_sum(f, 2.0);
    for (int a = 0; a < f.grid().dim(); ++a) sum += power_sum(partial(f, a), 2.0);
    return std::sqrt(sum);
}

double norm_h2(const Field& f) {
    const int dim = f.grid().dim();
    double sum = power_sum(f, 2.0);
    for (int a = 0; a < dim; ++a) {
        Field pa = partial(f, a);
        sum += power_sum(pa, 2.0);
        for (int b = 0; b < dim; ++b) sum += power_sum(partial(pa, b), 2.0);
    }
    return std::sqrt(sum);
}

double norm_h3(const Field& f) {
    const int dim = f.grid().dim();
    double sum = power_sum(f, 2.0);
    for (int a = 0; a < dim; ++a) {
        Field pa = partial(f, a);
        sum += power_sum(pa, 2.0);
        for (int b = 0; b < dim; ++b) {
            Field pab = partial(pa, b);
            sum += power_sum(pab, 2.0);
            for (int c = 0; c < dim; ++c) sum += power_sum(partial(pab, c), 2.0);
        }
    }
    return std::sqrt(sum);
}

double weighted_l2(const ScalarField& rho, const Field& w) {
    if (rho.components() != 1)
        throw std::invalid_argument("weight density must be a scalar field");
    if (!(rho.grid() == w.grid()))
        throw std::invalid_argument("weighted norm fields live on different grids");
    const GridSpec& g = w.grid();
    double sum = 0.0;
    for (int ix = 0; ix < g.nodes(0); ++ix) {
        for (int iy = 0; iy < g.nodes(1); ++iy) {
            const std::int64_t r = g.index(ix, iy);
            const double rv = rho.value(0, r);
            if (rv < 0.0)
                throw std::invalid_argument("weighted norm requires a nonnegative density");
            double mag2 = 0.0;
            for (int c = 0; c < w.components(); ++c) {
                const double v = w.value(c, r);
                mag2 += v * v;
            }
            sum += trapezoid_weight(g, ix, iy) * (rv * mag2);
        }
    }
    return std::sqrt(cell_volume(g) * sum);
}

}  // namespace elsim
