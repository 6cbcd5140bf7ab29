#include "wfcsc/hillclimb.hpp"

#include <stdexcept>

#include "wfcsc/rng.hpp"
#include "wfcsc/wfc.hpp"

namespace wfcsc {

namespace {

Cover scored_run(const Instance& instance, const HillClimbParams& p, double exp,
                 std::uint64_t run_index) {
    WfcParams wp;
    wp.scored = true;
    wp.exp = exp;
    wp.c = p.c;
    wp.seed = derive_seed(p.seed, run_index);
    wp.deterministic_ties = p.deterministic_ties;
    return wfc_solve(instance, wp);
}

}  // namespace

HillClimbResult hill_climb_detailed(const Instance& instance, const HillClimbParams& params) {
    if (params.n < 0 || !(params.temp > 0.0))
        throw std::invalid_argument("hill_climb requires n >= 0 and temp > 0");

    HillClimbResult result;
    result.trace.reserve(static_cast<std::size_t>(params.n));

    double exp = params.exp_i;
    double temp = params.temp;
    double add = 0.0;

    // Run 0 is the exp = 1 starting point; iteration i uses run index i + 1.
    Cover best = scored_run(instance, params, 1.0, 0);
    std::size_t prev_size = best.size();
    result.baseline_size = best.size();

    for (int i = 0; i < params.n; ++i) {
        Cover s = scored_run(instance, params, exp, static_cast<std::uint64_t>(i) + 1);
        HillClimbIteration it{exp, temp, 0.0, s.size()};
        if (prev_size > s.size()) {
            add = (add > 0.0) ? temp * exp : -temp * exp;
            if (best.size() > s.size()) best = s;
        } else {
            add = (add > 0.0) ? -temp * exp : temp * exp;
        }
        prev_size = s.size();
        temp *= 0.99;
        exp += add;
        it.add = add;
        result.trace.push_back(it);
    }

    result.best = std::move(best);
    return result;
}

Cover hill_climb(const Instance& instance, const HillClimbParams& params) {
    return hill_climb_detailed(instance, params).best;
}

}  // namespace wfcsc
