#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "elsim/grid.hpp"

namespace elsim {

/// Grid function with a fixed number of components per node.  Storage is
/// component-planar: entry(c, node) = values[c*node_count + node], nodes in
/// lexicographic (ix, iy) order.  Every constructor and every operation that
/// returns a Field checks that all entries are finite; NaN/Inf never lives
/// in a Field.
class Field {
public:
    Field(GridSpec grid, int components);                              // zero-filled
    Field(GridSpec grid, int components, std::vector<double> values);  // validated

    static Field scalar(const GridSpec& g) { return Field(g, 1); }
    static Field vector(const GridSpec& g) { return Field(g, g.dim()); }
    static Field director(const GridSpec& g) { return Field(g, 3); }
    static Field tensor(const GridSpec& g) { return Field(g, g.dim() * g.dim()); }

    const GridSpec& grid() const { return grid_; }
    int components() const { return components_; }
    std::int64_t node_count() const { return grid_.node_count(); }
    std::int64_t size() const { return std::int64_t(values_.size()); }

    double value(int c, std::int64_t node) const { return values_[c * node_count() + node]; }
    double& value(int c, std::int64_t node) { return values_[c * node_count() + node]; }

    std::span<const double> component(int c) const
    { return {values_.data() + c * node_count(), std::size_t(node_count())}; }
    std::span<double> component(int c)
    { return {values_.data() + c * node_count(), std::size_t(node_count())}; }

    std::span<const double> raw() const { return values_; }
    std::span<double> raw() { return values_; }

    /// Throws std::invalid_argument if any entry is NaN or infinite.
    void ensure_finite(const char* what = "field") const;

    bool same_shape(const Field& o) const
    { return grid_ == o.grid_ && components_ == o.components_; }

private:
    GridSpec grid_;
    int components_;
    std::vector<double> values_;
};

using ScalarField = Field;
using VectorField = Field;
using DirectorField = Field;
using TensorField = Field;

// Value arithmetic used across the solvers and tests.  Shapes must match.
Field operator+(const Field& a, const Field& b);
Field operator-(const Field& a, const Field& b);
Field operator*(double s, const Field& f);

double max_abs(const Field& f);
double min_value(const Field& f);

/// Largest absolute entry difference; shapes must match.
double max_abs_diff(const Field& a, const Field& b);

}  // namespace elsim
