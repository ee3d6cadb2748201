#pragma once

#include <string>
#include <vector>

namespace elsim {

/// One refinement pair of a manufactured-solution study.  The coarse and
/// fine runs halve the refined quantity; ratio = coarse_error / fine_error.
struct MmsResult {
    std::string solver;   // transport | director | momentum
    std::string study;    // spatial | temporal
    int nodes_coarse = 0;
    int nodes_fine = 0;
    double dt_coarse = 0.0;
    double dt_fine = 0.0;
    double error_coarse = 0.0;
    double error_fine = 0.0;
    double ratio = 0.0;
};

// Manufactured 1-D cases with analytic solutions (transport: closed-form
// characteristics; director and momentum: analytic forcing).  Spatial
// studies halve h (the parabolic steps tie dt to h^2 so the first-order
// time error refines at the same rate); temporal studies halve dt (the
// transport study refines h with dt, since its leading time error scales
// with h^2/dt).

MmsResult mms_transport_spatial();
MmsResult mms_transport_temporal();
MmsResult mms_director_spatial();
MmsResult mms_director_temporal();
MmsResult mms_momentum_spatial();
MmsResult mms_momentum_temporal();

/// All six studies in a fixed order.
std::vector<MmsResult> run_mms_suite();

}  // namespace elsim
