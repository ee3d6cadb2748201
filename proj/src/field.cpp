#include "elsim/field.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace elsim {

Field::Field(GridSpec grid, int components)
    : grid_(grid), components_(components),
      values_(std::size_t(grid.node_count()) * components, 0.0) {
    if (components < 1)
        throw std::invalid_argument("field needs at least one component");
}

Field::Field(GridSpec grid, int components, std::vector<double> values)
    : grid_(grid), components_(components), values_(std::move(values)) {
    if (components < 1)
        throw std::invalid_argument("field needs at least one component");
    if (std::int64_t(values_.size()) != grid_.node_count() * components_)
        throw std::invalid_argument("field value count " + std::to_string(values_.size()) +
                                    " does not match node count * components");
    ensure_finite();
}

void Field::ensure_finite(const char* what) const {
    for (double v : values_)
        if (!std::isfinite(v))
            throw std::invalid_argument(std::string(what) + " contains a non-finite entry");
}

static void check_shapes(const Field& a, const Field& b, const char* op) {
    if (!a.same_shape(b))
        throw std::invalid_argument(std::string(op) + ": field shapes do not match");
}

Field operator+(const Field& a, const Field& b) {
    check_shapes(a, b, "field sum");
    Field out = a;
    auto o = out.raw();
    auto rb = b.raw();
    for (std::size_t i = 0; i < o.size(); ++i) o[i] += rb[i];
    out.ensure_finite("field sum");
    return out;
}

Field operator-(const Field& a, const Field& b) {
    check_shapes(a, b, "field difference");
    Field out = a;
    auto o = out.raw();
    auto rb = b.raw();
    for (std::size_t i = 0; i < o.size(); ++i) o[i] -= rb[i];
    out.ensure_finite("field difference");
    return out;
}

Field operator*(double s, const Field& f) {
    Field out = f;
    for (double& v : out.raw()) v *= s;
    out.ensure_finite("scaled field");
    return out;
}

double max_abs(const Field& f) {
    double m = 0.0;
    for (double v : f.raw()) m = std::max(m, std::abs(v));
    return m;
}

double min_value(const Field& f) {
    double m = f.raw()[0];
    for (double v : f.raw()) m = std::min(m, v);
    return m;
}

double max_abs_diff(const Field& a, const Field& b) {
    check_shapes(a, b, "field comparison");
    double m = 0.0;
    auto ra = a.raw();
    auto rb = b.raw();
    for (std::size_t i = 0; i < ra.size(); ++i) m = std::max(m, std::abs(ra[i] - rb[i]));
    return m;
}

}  // namespace elsim
