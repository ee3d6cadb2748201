#include "elsim/constitutive.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "elsim/operators.hpp"

namespace elsim {

void PressureLaw::validate() const {
    if (!(a > 0.0) || !std::isfinite(a))
        throw std::invalid_argument("pressure coefficient a must be positive");
    if (!(gamma > 1.0) || !std::isfinite(gamma))
        throw std::invalid_argument("adiabatic exponent gamma must exceed 1");
}

void ModelParams::validate() const {
    if (!(mu > 0.0) || !std::isfinite(mu))
        throw std::invalid_argument("viscosity mu must be positive");
    if (!(lambda > 0.0) || !std::isfinite(lambda))
        throw std::invalid_argument("elastic coupling lambda must be positive");
    if (!(nu > 0.0) || !std::isfinite(nu))
        throw std::invalid_argument("director mobility nu must be positive");
    if (!(sigma > 0.0) || !std::isfinite(sigma))
        throw std::invalid_argument("penalty width sigma must be positive");
    if (!(delta >= 0.0) || !(delta < 1.0) || !std::isfinite(delta))
        throw std::invalid_argument("vacuum shift delta must lie in [0, 1)");
    const double m2 = m[0] * m[0] + m[1] * m[1] + m[2] * m[2];
    if (std::abs(std::sqrt(m2) - 1.0) > 1e-12)
        throw std::invalid_argument("boundary director m must be a unit vector");
    pressure.validate();
}

double pressure_value(double rho, const PressureLaw& law) {
    if (rho < 0.0) throw std::invalid_argument("pressure of a negative density");
    return law.a * std::pow(rho, law.gamma);
}

double pressure_deriv_value(double rho, const PressureLaw& law) {
    if (rho < 0.0) throw std::invalid_argument("pressure derivative of a negative density");
    return law.a * law.gamma * std::pow(rho, law.gamma - 1.0);
}

ScalarField pressure(const ScalarField& rho, const PressureLaw& law) {
    if (rho.components() != 1) throw std::invalid_argument("pressure expects a scalar field");
    ScalarField out(rho.grid(), 1);
    for (std::int64_t r = 0; r < rho.grid().node_count(); ++r)
        out.value(0, r) = pressure_value(rho.value(0, r), law);
    out.ensure_finite("pressure");
    return out;
}

ScalarField pressure_deriv(const ScalarField& rho, const PressureLaw& law) {
    if (rho.components() != 1) throw std::invalid_argument("pressure expects a scalar field");
    ScalarField out(rho.grid(), 1);
    for (std::int64_t r = 0; r < rho.grid().node_count(); ++r)
        out.value(0, r) = pressure_deriv_value(rho.value(0, r), law);
    out.ensure_finite("pressure derivative");
    return out;
}

DirectorField gl_force(const DirectorField& d, double sigma) {
    if (d.components() != 3) throw std::invalid_argument("director field must have 3 components");
    if (!(sigma > 0.0)) throw std::invalid_argument("penalty width sigma must be positive");
    DirectorField out(d.grid(), 3);
    const double inv_s2 = 1.0 / (sigma * sigma);
    for (std::int64_t r = 0; r < d.grid().node_count(); ++r) {
        const double d0 = d.value(0, r), d1 = d.value(1, r), d2 = d.value(2, r);
        const double excess = d0 * d0 + d1 * d1 + d2 * d2 - 1.0;
        out.value(0, r) = inv_s2 * excess * d0;
        out.value(1, r) = inv_s2 * excess * d1;
        out.value(2, r) = inv_s2 * excess * d2;
    }
    out.ensure_finite("penalty force");
    return out;
}

ScalarField gl_potential(const DirectorField& d, double sigma) {
    if (d.components() != 3) throw std::invalid_argument("director field must have 3 components");
    if (!(sigma > 0.0)) throw std::invalid_argument("penalty width sigma must be positive");
    ScalarField out(d.grid(), 1);
    const double c = 1.0 / (4.0 * sigma * sigma);
    for (std::int64_t r = 0; r < d.grid().node_count(); ++r) {
        const double d0 = d.value(0, r), d1 = d.value(1, r), d2 = d.value(2, r);
        const double excess = d0 * d0 + d1 * d1 + d2 * d2 - 1.0;
        out.value(0, r) = c * excess * excess;
    }
    out.ensure_finite("penalty potential");
    return out;
}

DirectorField gl_linearized(const DirectorField& n, const DirectorField& d,
                            const std::array<double, 3>& m, double sigma) {
    if (n.components() != 3 || d.components() != 3)
        throw std::invalid_argument("director fields must have 3 components");
    if (!(n.grid() == d.grid()))
        throw std::invalid_argument("linearized penalty fields live on different grids");
    if (!(sigma > 0.0)) throw std::invalid_argument("penalty width sigma must be positive");
    const double m2 = m[0] * m[0] + m[1] * m[1] + m[2] * m[2];
    if (std::abs(std::sqrt(m2) - 1.0) > 1e-12)
        throw std::invalid_argument("far-field director m must be a unit vector");
    DirectorField out(n.grid(), 3);
    const double inv_s2 = 1.0 / (sigma * sigma);
    for (std::int64_t r = 0; r < n.grid().node_count(); ++r) {
        double inner = 0.0;
        for (int c = 0; c < 3; ++c)
            inner += (n.value(c, r) + m[std::size_t(c)]) * (d.value(c, r) - m[std::size_t(c)]);
        const double s = inv_s2 * inner;
        for (int c = 0; c < 3; ++c) out.value(c, r) = s * n.value(c, r);
    }
    out.ensure_finite("linearized penalty force");
    return out;
}

TensorField ericksen_stress(const DirectorField& d, double sigma) {
    if (d.components() != 3) throw std::invalid_argument("director field must have 3 components");
    const GridSpec& g = d.grid();
    const int dim = g.dim();
    const Field grad = gradient(d);  // component k*dim + a holds d_a d_k
    const ScalarField pot = gl_potential(d, sigma);
    TensorField out(g, dim * dim);
    for (std::int64_t r = 0; r < g.node_count(); ++r) {
        double grad2 = 0.0;
        for (int k = 0; k < 3; ++k)
            for (int a = 0; a < dim; ++a) {
                const double v = grad.value(k * dim + a, r);
                grad2 += v * v;
            }
        const double trace_part = 0.5 * grad2 + pot.value(0, r);
        for (int i = 0; i < dim; ++i) {
            for (int j = 0; j < dim; ++j) {
                double s = 0.0;
                for (int k = 0; k < 3; ++k)
                    s += grad.value(k * dim + i, r) * grad.value(k * dim + j, r);
                if (i == j) s -= trace_part;
                out.value(i * dim + j, r) = s;
            }
        }
    }
    out.ensure_finite("elastic stress");
    return out;
}

VectorField divergence_tensor(const TensorField& S) {
    const GridSpec& g = S.grid();
    const int dim = g.dim();
    if (S.components() != dim * dim)
        throw std::invalid_argument("tensor field must have dim*dim components");
    VectorField out(g, dim);
    for (int j = 0; j < dim; ++j) {
        for (int i = 0; i < dim; ++i) {
            // column (S_0j, S_1j): divergence over the row index
            Field col(g, 1);
            auto dst = col.component(0);
            auto src = S.component(i * dim + j);
            for (std::int64_t r = 0; r < g.node_count(); ++r) dst[r] = src[r];
            Field der = partial(col, i);
            auto o = out.component(j);
            auto dv = der.component(0);
            for (std::int64_t r = 0; r < g.node_count(); ++r) o[r] += dv[r];
        }
    }
    out.ensure_finite("stress divergence");
    return out;
}

VectorField elastic_force(const DirectorField& d, const ModelParams& params) {
    if (d.components() != 3) throw std::invalid_argument("director field must have 3 components");
    const GridSpec& g = d.grid();
    const int dim = g.dim();
    const Field grad = gradient(d);
    const Field lap = laplacian(d);
    const DirectorField f = gl_force(d, params.sigma);
    VectorField out(g, dim);
    for (std::int64_t r = 0; r < g.node_count(); ++r) {
        for (int j = 0; j < dim; ++j) {
            double s = 0.0;
            for (int k = 0; k < 3; ++k)
                s += grad.value(k * dim + j, r) * (lap.value(k, r) - f.value(k, r));
            out.value(j, r) = -params.lambda * s;
        }
    }
    out.ensure_finite("elastic force");
    return out;
}

}  // namespace elsim
