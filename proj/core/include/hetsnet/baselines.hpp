#pragma once

#include "hetsnet/exact.hpp"

namespace hetsnet {

// Strongest-signal association: users take one shot at their best-gain
// available base station, strongest candidates first, and a pair is kept
// only if the cumulative association stays feasible. Users whose shot
// fails stay unassociated, so the objective counts satisfied users only.
SolveResult solve_max_sinr(const Scenario& scn);

// Interference-avoidance association: candidate pairs ranked by the total
// gain the user would receive from every other base station (the predicted
// interference if all of them transmit), smallest first, kept under the
// same cumulative feasibility filter.
SolveResult solve_min_interference(const Scenario& scn);

}  // namespace hetsnet
