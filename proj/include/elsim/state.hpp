#pragma once

#include <vector>

#include "elsim/field.hpp"
#include "elsim/grid.hpp"

namespace elsim {

/// One time level of the coupled system: density (nonnegative), velocity
/// (dim components) and director (3 components) on a shared grid.
struct FluidState {
    FluidState(ScalarField rho_in, VectorField u_in, DirectorField d_in, double time_in);

    ScalarField rho;
    VectorField u;
    DirectorField d;
    double time;
};

/// steps + 1 states at times k*dt, validated on construction.
struct Trajectory {
    Trajectory(TimeGrid tg, std::vector<FluidState> states_in);

    TimeGrid time_grid;
    std::vector<FluidState> states;

    int levels() const { return int(states.size()); }
    const FluidState& at(int k) const { return states[std::size_t(k)]; }
};

}  // namespace elsim
