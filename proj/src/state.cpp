#include "elsim/state.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace elsim {

FluidState::FluidState(ScalarField rho_in, VectorField u_in, DirectorField d_in,
                       double time_in)
    : rho(std::move(rho_in)), u(std::move(u_in)), d(std::move(d_in)), time(time_in) {
    const GridSpec& g = rho.grid();
    if (rho.components() != 1)
        throw std::invalid_argument("state density must be a scalar field");
    if (!(u.grid() == g) || !(d.grid() == g))
        throw std::invalid_argument("state fields live on different grids");
    if (u.components() != g.dim())
        throw std::invalid_argument("state velocity needs one component per axis");
    if (d.components() != 3)
        throw std::invalid_argument("state director must have 3 components");
    if (!std::isfinite(time))
        throw std::invalid_argument("state time must be finite");
    for (std::int64_t r = 0; r < g.node_count(); ++r)
        if (rho.value(0, r) < 0.0)
            throw std::invalid_argument("state density negative at node " + std::to_string(r));
}

Trajectory::Trajectory(TimeGrid tg, std::vector<FluidState> states_in)
    : time_grid(tg), states(std::move(states_in)) {
    if (std::int64_t(states.size()) != tg.steps() + 1)
        throw std::invalid_argument("trajectory needs steps + 1 states");
    for (std::size_t k = 0; k < states.size(); ++k) {
        if (!(states[k].rho.grid() == states[0].rho.grid()))
            throw std::invalid_argument("trajectory states live on different grids");
        if (states[k].time != tg.time(int(k)))
            throw std::invalid_argument("trajectory state " + std::to_string(k) +
                                        " carries the wrong time stamp");
    }
}

}  // namespace elsim
