#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "floqlat/space.hpp"

namespace floqlat {

struct DrivenTerm {
    Operator op;
    std::function<double(double)> envelope; // t in us -> real factor
    double amp_bound = 1.0;  // max |envelope| over the run
    double ang_freq = 0.0;   // characteristic angular frequency (rad/us)
};

// H(t) = sum static_terms + sum envelope_j(t) * op_j, all angular (rad/us).
struct TimeDependentModel {
    SpaceDescriptor space;
    std::vector<Operator> static_terms;
    std::vector<DrivenTerm> driven_terms;
};

struct Trajectory {
    std::vector<double> times;
    std::vector<std::string> labels;
    std::vector<std::vector<double>> observables; // one series per label
    std::vector<double> norms;
    std::vector<std::string> warnings;

    const std::vector<double>& series(const std::string& label) const;
};

struct EvolveOptions {
    double dt = 0.0;            // 0 -> 1 / (rate_margin * fastest rate)
    double rate_margin = 100.0; // must keep dt <= 1/(50 * fastest rate)
};

// Fixed-step RK4 integration of i d|psi>/dt = H(t)|psi>, sampling the
// observables on t_grid. Deterministic: no adaptivity.
Trajectory evolve(const TimeDependentModel& model, const cxvec& initial,
                  const std::vector<double>& t_grid,
                  const std::vector<std::pair<std::string, Operator>>& observables,
                  const EvolveOptions& opts = {});

// End state only (used by step-size/order checks).
cxvec evolve_state(const TimeDependentModel& model, const cxvec& initial,
                   double t0, double t1, double dt);

// Fastest rate appearing in the model (rad/us): spectral bound estimate of
// H plus envelope frequencies. The automatic step is 1/(rate_margin * this).
double rate_scale(const TimeDependentModel& model);

} // namespace floqlat
