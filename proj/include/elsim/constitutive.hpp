#pragma once

#include <array>

#include "elsim/field.hpp"

namespace elsim {

/// Isentropic pressure law p(rho) = a rho^gamma with a > 0, gamma > 1.
struct PressureLaw {
    double a = 1.0;
    double gamma = 1.4;

    void validate() const;
    bool operator==(const PressureLaw&) const = default;
};

/// Material and regularization parameters.  mu: viscosity, lambda: elastic
/// coupling, nu: director mobility, sigma: relaxation width, delta: vacuum
/// regularization shift in [0, 1), m: unit far-field director.
struct ModelParams {
    double mu = 1.0;
    double lambda = 1.0;
    double nu = 1.0;
    double sigma = 1.0;
    double delta = 1e-3;
    std::array<double, 3> m{0.0, 0.0, 1.0};
    PressureLaw pressure;

    void validate() const;
    bool operator==(const ModelParams&) const = default;
};

double pressure_value(double rho, const PressureLaw& law);
double pressure_deriv_value(double rho, const PressureLaw& law);

/// Pointwise p(rho) / p'(rho); any negative rho entry raises
/// std::invalid_argument.
ScalarField pressure(const ScalarField& rho, const PressureLaw& law);
ScalarField pressure_deriv(const ScalarField& rho, const PressureLaw& law);

/// Relaxation force f(d) = (|d|^2 - 1) d / sigma^2, componentwise per node.
DirectorField gl_force(const DirectorField& d, double sigma);

/// Relaxation potential F(d) = (|d|^2 - 1)^2 / (4 sigma^2).
ScalarField gl_potential(const DirectorField& d, double sigma);

/// Linearized relaxation term ((n + m) . (d - m)) n / sigma^2.  With n = d
/// and |m| = 1 this collapses to gl_force(d, sigma) up to rounding.  Grids
/// must match.
DirectorField gl_linearized(const DirectorField& n, const DirectorField& d,
                            const std::array<double, 3>& m, double sigma);

/// Elastic stress S_ij = sum_k (partial_i d_k)(partial_j d_k)
///                      - (|grad d|^2 / 2 + F(d)) delta_ij,
/// a dim x dim tensor per node (component index i*dim + j).  This grouping
/// makes div(S) agree with the elastic force below to second order.
TensorField ericksen_stress(const DirectorField& d, double sigma);

/// Row-wise tensor divergence: component j = sum_i partial_i S_ij.
VectorField divergence_tensor(const TensorField& S);

/// Elastic force -lambda (grad d)^T (lap d - gl_force(d)), the form used in
/// the momentum equation.
VectorField elastic_force(const DirectorField& d, const ModelParams& params);

}  // namespace elsim
