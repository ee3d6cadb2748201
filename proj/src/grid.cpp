#include "elsim/grid.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace elsim {

GridSpec::GridSpec(int dim, std::array<int, 2> nodes, std::array<double, 2> extent)
    : dim_(dim), nodes_(nodes), extent_{0.0, 0.0}, spacing_{0.0, 0.0} {
    if (dim != 1 && dim != 2)
        throw std::invalid_argument("grid dim must be 1 or 2, got " + std::to_string(dim));
    if (dim == 1) nodes_[1] = 1;
    for (int a = 0; a < dim_; ++a) {
        if (nodes_[a] < 5)
            throw std::invalid_argument("grid needs at least 5 nodes per axis, got " +
                                        std::to_string(nodes_[a]));
        if (!(extent[a] > 0.0) || !std::isfinite(extent[a]))
            throw std::invalid_argument("grid extent must be positive and finite");
        spacing_[a] = extent[a] / (nodes_[a] - 1);
        extent_[a] = spacing_[a] * (nodes_[a] - 1);   // snap: identity holds bitwise
    }
}

GridSpec GridSpec::line(int nodes, double extent) {
    return GridSpec(1, {nodes, 1}, {extent, 0.0});
}

GridSpec GridSpec::box(int nodes_x, int nodes_y, double extent_x, double extent_y) {
    return GridSpec(2, {nodes_x, nodes_y}, {extent_x, extent_y});
}

double GridSpec::min_spacing() const {
    return dim_ == 1 ? spacing_[0] : std::min(spacing_[0], spacing_[1]);
}

bool GridSpec::on_boundary(int ix, int iy) const {
    if (ix == 0 || ix == nodes_[0] - 1) return true;
    if (dim_ == 2 && (iy == 0 || iy == nodes_[1] - 1)) return true;
    return false;
}

bool GridSpec::operator==(const GridSpec& o) const {
    return dim_ == o.dim_ && nodes_ == o.nodes_ && extent_ == o.extent_;
}

TimeGrid::TimeGrid(double t_end, int steps) : t_end_(0.0), steps_(steps), dt_(0.0) {
    if (steps < 1)
        throw std::invalid_argument("time grid needs at least 1 step, got " +
                                    std::to_string(steps));
    if (!(t_end > 0.0) || !std::isfinite(t_end))
        throw std::invalid_argument("time horizon must be positive and finite");
    dt_ = t_end / steps;
    t_end_ = dt_ * steps;   // snap: identity holds bitwise
}

}  // namespace elsim
