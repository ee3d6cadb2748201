#include "elsim/operators.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace elsim {

namespace {

// First derivative along one axis of one component plane.  Central stencil
// inside, one-sided second-order (-3, 4, -1)/(2h) at the axis ends.
void deriv1_component(std::span<const double> src, const GridSpec& g, int axis,
                      std::span<double> dst) {
    const int nx = g.nodes(0);
    const int ny = g.nodes(1);
    const int count = g.nodes(axis);
    const std::int64_t stride = (axis == 0) ? ny : 1;
    const double inv2h = 1.0 / (2.0 * g.spacing(axis));
    for (int ix = 0; ix < nx; ++ix) {
        for (int iy = 0; iy < ny; ++iy) {
            const std::int64_t r = g.index(ix, iy);
            const int pos = (axis == 0) ? ix : iy;
            if (pos == 0)
                dst[r] = (-3.0 * src[r] + 4.0 * src[r + stride] - src[r + 2 * stride]) * inv2h;
            else if (pos == count - 1)
                dst[r] = (3.0 * src[r] - 4.0 * src[r - stride] + src[r - 2 * stride]) * inv2h;
            else
                dst[r] = (src[r + stride] - src[r - stride]) * inv2h;
        }
    }
}

// Second derivative along one axis.  Central 3-point stencil inside,
// one-sided 4-point (2, -5, 4, -1)/h^2 at the axis ends (second order, exact
// on cubics).
void deriv2_component_add(std::span<const double> src, const GridSpec& g, int axis,
                          std::span<double> dst) {
    const int nx = g.nodes(0);
    const int ny = g.nodes(1);
    const int count = g.nodes(axis);
    const std::int64_t stride = (axis == 0) ? ny : 1;
    const double invh2 = 1.0 / (g.spacing(axis) * g.spacing(axis));
    for (int ix = 0; ix < nx; ++ix) {
        for (int iy = 0; iy < ny; ++iy) {
            const std::int64_t r = g.index(ix, iy);
            const int pos = (axis == 0) ? ix : iy;
            double v;
            if (pos == 0)
                v = (2.0 * src[r] - 5.0 * src[r + stride] + 4.0 * src[r + 2 * stride] -
                     src[r + 3 * stride]) * invh2;
            else if (pos == count - 1)
                v = (2.0 * src[r] - 5.0 * src[r - stride] + 4.0 * src[r - 2 * stride] -
                     src[r - 3 * stride]) * invh2;
            else
                v = (src[r - stride] - 2.0 * src[r] + src[r + stride]) * invh2;
            dst[r] += v;
        }
    }
}

void check_axis(const GridSpec& g, int axis) {
    if (axis < 0 || axis >= g.dim())
        throw std::invalid_argument("derivative axis " + std::to_string(axis) +
                                    " out of range for dim " + std::to_string(g.dim()));
}

}  // namespace

Field partial(const Field& f, int axis) {
    const GridSpec& g = f.grid();
    check_axis(g, axis);
    Field out(g, f.components());
    for (int c = 0; c < f.components(); ++c)
        deriv1_component(f.component(c), g, axis, out.component(c));
    out.ensure_finite("partial derivative");
    return out;
}

Field gradient(const Field& f) {
    const GridSpec& g = f.grid();
    const int dim = g.dim();
    Field out(g, f.components() * dim);
    for (int c = 0; c < f.components(); ++c)
        for (int a = 0; a < dim; ++a)
            deriv1_component(f.component(c), g, a, out.component(c * dim + a));
    out.ensure_finite("gradient");
    return out;
}

ScalarField divergence(const VectorField& v) {
    const GridSpec& g = v.grid();
    if (v.components() != g.dim())
        throw std::invalid_argument("divergence needs one component per axis");
    Field out(g, 1);
    Field tmp(g, 1);
    deriv1_component(v.component(0), g, 0, out.component(0));
    if (g.dim() == 2) {
        deriv1_component(v.component(1), g, 1, tmp.component(0));
        auto o = out.component(0);
        auto t = tmp.component(0);
        for (std::int64_t i = 0; i < g.node_count(); ++i) o[i] += t[i];
    }
    out.ensure_finite("divergence");
    return out;
}

Field laplacian(const Field& f) {
    const GridSpec& g = f.grid();
    Field out(g, f.components());
    for (int c = 0; c < f.components(); ++c)
        for (int a = 0; a < g.dim(); ++a)
            deriv2_component_add(f.component(c), g, a, out.component(c));
    out.ensure_finite("laplacian");
    return out;
}

namespace {

struct CellWeights {
    std::int64_t base = 0;   // node index of the lower cell corner
    double tx = 0.0;
    double ty = 0.0;
};

CellWeights locate(const GridSpec& g, std::array<double, 2> p) {
    CellWeights cw;
    std::array<int, 2> cell{0, 0};
    std::array<double, 2> t{0.0, 0.0};
    for (int a = 0; a < g.dim(); ++a) {
        const double L = g.extent(a);
        const double slack = 1e-12 * L;
        double x = p[a];
        if (x < -slack || x > L + slack)
            throw std::domain_error("interpolation point coordinate " + std::to_string(x) +
                                    " outside [0, " + std::to_string(L) + "]");
        x = std::min(std::max(x, 0.0), L);
        const double h = g.spacing(a);
        int i = int(std::floor(x / h));
        i = std::min(std::max(i, 0), g.nodes(a) - 2);
        double frac = x / h - i;
        frac = std::min(std::max(frac, 0.0), 1.0);
        cell[a] = i;
        t[a] = frac;
    }
    cw.base = g.index(cell[0], cell[1]);
    cw.tx = t[0];
    cw.ty = t[1];
    return cw;
}

double apply_weights(std::span<const double> src, const GridSpec& g, const CellWeights& cw) {
    if (g.dim() == 1)
        return (1.0 - cw.tx) * src[cw.base] + cw.tx * src[cw.base + 1];
    const std::int64_t ny = g.nodes(1);
    const double a00 = (1.0 - cw.tx) * (1.0 - cw.ty);
    const double a01 = (1.0 - cw.tx) * cw.ty;
    const double a10 = cw.tx * (1.0 - cw.ty);
    const double a11 = cw.tx * cw.ty;
    return a00 * src[cw.base] + a01 * src[cw.base + 1] +
           a10 * src[cw.base + ny] + a11 * src[cw.base + ny + 1];
}

}  // namespace

std::vector<double> interpolate(const Field& f, std::array<double, 2> p) {
    const CellWeights cw = locate(f.grid(), p);
    std::vector<double> out(std::size_t(f.components()));
    for (int c = 0; c < f.components(); ++c)
        out[std::size_t(c)] = apply_weights(f.component(c), f.grid(), cw);
    return out;
}

double interpolate_component(const Field& f, int c, std::array<double, 2> p) {
    if (c < 0 || c >= f.components())
        throw std::invalid_argument("interpolation component out of range");
    const CellWeights cw = locate(f.grid(), p);
    return apply_weights(f.component(c), f.grid(), cw);
}

}  // namespace elsim
