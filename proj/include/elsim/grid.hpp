#pragma once

#include <array>
#include <cstdint>

namespace elsim {

/// Uniform node-centered grid over [0, Lx] (1-D) or [0, Lx] x [0, Ly] (2-D).
/// Boundary nodes are stored like any other node.  The requested extent is
/// snapped to spacing*(nodes-1) so that identity holds bitwise as stored.
class GridSpec {
public:
    GridSpec(int dim, std::array<int, 2> nodes, std::array<double, 2> extent);

    static GridSpec line(int nodes, double extent);
    static GridSpec box(int nodes_x, int nodes_y, double extent_x, double extent_y);

    int dim() const { return dim_; }
    int nodes(int axis) const { return nodes_[axis]; }
    double extent(int axis) const { return extent_[axis]; }
    double spacing(int axis) const { return spacing_[axis]; }
    double min_spacing() const;

    std::int64_t node_count() const { return std::int64_t(nodes_[0]) * nodes_[1]; }
    double coord(int axis, int i) const { return i * spacing_[axis]; }

    /// Lexicographic node index: ix major, iy minor.
    std::int64_t index(int ix, int iy = 0) const { return std::int64_t(ix) * nodes_[1] + iy; }

    bool on_boundary(int ix, int iy = 0) const;

    bool operator==(const GridSpec& o) const;
    bool operator!=(const GridSpec& o) const { return !(*this == o); }

private:
    int dim_;
    std::array<int, 2> nodes_;    // axis 1 collapses to one node in 1-D
    std::array<double, 2> extent_;
    std::array<double, 2> spacing_;
};

/// Uniform partition of [0, t_end] into steps intervals.  t_end is snapped
/// to dt*steps so the product identity holds bitwise as stored.
class TimeGrid {
public:
    TimeGrid(double t_end, int steps);

    double t_end() const { return t_end_; }
    int steps() const { return steps_; }
    double dt() const { return dt_; }
    double time(int level) const { return level * dt_; }

    bool operator==(const TimeGrid& o) const
    { return t_end_ == o.t_end_ && steps_ == o.steps_; }

private:
    double t_end_;
    int steps_;
    double dt_;
};

}  // namespace elsim
