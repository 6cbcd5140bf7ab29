#pragma once

#include <cstdint>
#include <vector>

#include "wfcsc/instance.hpp"

namespace wfcsc {

struct HillClimbParams {
    int n = 100;          // iteration count
    double exp_i = 1.0;   // initial entropy exponent
    double temp = 0.1;    // initial temperature (step magnitude factor)
    double c = 0.9;       // conflicts exponent passed through to the scorer
    std::uint64_t seed = 0;
    bool deterministic_ties = false;
};

struct HillClimbIteration {
    double exp;        // exponent used for this iteration's run
    double temp;       // temperature at the start of the iteration
    double add;        // adjustment applied to exp at the end
    std::size_t size;  // cover size this iteration produced
};

struct HillClimbResult {
    Cover best;
    std::size_t baseline_size = 0;  // the exp = 1 starting solution
    std::vector<HillClimbIteration> trace;
};

// Tunes the entropy exponent across repeated scored solver runs. Starts from
// the exp = 1 solution; each iteration re-solves from scratch with the
// current exponent, keeps stepping exp in the same direction on improvement
// and flips direction otherwise, with the step magnitude decaying by 0.99
// per iteration. exp is never clamped; the scorer is well-defined for any
// finite exponent.
//
// Iteration i derives its solver seed from params.seed and i, so results are
// reproducible and a run's prefix does not depend on n.
HillClimbResult hill_climb_detailed(const Instance& instance, const HillClimbParams& params);

// best |cover| is non-increasing in n and never worse than the exp = 1 run.
Cover hill_climb(const Instance& instance, const HillClimbParams& params);

}  // namespace wfcsc
