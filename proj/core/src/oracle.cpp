#include "wfcsc/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <limits>
#include <stdexcept>

#include "wfcsc/baselines.hpp"

namespace wfcsc {

Cover brute_force_min_cover(const Instance& instance) {
    const std::size_t m = instance.num_sets();
    if (m > 20)
        throw BuildError("brute_force_min_cover refuses instances with more than 20 sets (got " +
                         std::to_string(m) + ")");

    std::vector<SetId> best;
    bool have_best = false;
    std::vector<SetId> ids;

    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
        const auto size = static_cast<std::size_t>(std::popcount(mask));
        if (have_best && size > best.size()) continue;

        BitVector covered(instance.universe_size());
        ids.clear();
        for (std::size_t s = 0; s < m; ++s) {
            if (mask & (1u << s)) {
                covered |= instance.set_bits(static_cast<SetId>(s));
                ids.push_back(static_cast<SetId>(s));
            }
        }
        if (!covered.all()) continue;
        if (!have_best || size < best.size() ||
            (size == best.size() && std::lexicographical_compare(ids.begin(), ids.end(),
                                                                 best.begin(), best.end()))) {
            best = ids;
            have_best = true;
        }
    }
    assert(have_best);  // instance invariant: the full family covers the universe
    return Cover{instance.name(), std::move(best)};
}

namespace {

struct BranchAndBound {
    const Instance& inst;
    const OracleLimits& limits;
    BitVector covered;
    std::vector<SetId> chosen;
    std::vector<SetId> best;
    std::uint64_t nodes = 0;
    bool aborted = false;

    BranchAndBound(const Instance& i, const OracleLimits& l)
        : inst(i), limits(l), covered(i.universe_size()) {}

    void consider_incumbent() {
        std::vector<SetId> ids = chosen;
        std::sort(ids.begin(), ids.end());
        if (chosen.size() < best.size() ||
            (chosen.size() == best.size() &&
             std::lexicographical_compare(ids.begin(), ids.end(), best.begin(), best.end())))
            best = std::move(ids);
    }

    void search() {
        if (aborted) return;
        if (++nodes > limits.max_nodes) {
            aborted = true;
            return;
        }
        const std::size_t uncov = inst.universe_size() - covered.count();
        if (uncov == 0) {
            consider_incumbent();
            return;
        }

        // Lower bound: even the most productive remaining set covers at most
        // max_gain new elements.
        std::size_t max_gain = 0;
        for (std::size_t s = 0; s < inst.num_sets(); ++s)
            max_gain = std::max(max_gain,
                                inst.set_bits(static_cast<SetId>(s)).count_and_not(covered));
        assert(max_gain >= 1);
        const std::size_t bound = chosen.size() + (uncov + max_gain - 1) / max_gain;
        // Equal-size covers are still explored: one may be lexicographically
        // smaller than the incumbent.
        if (bound > best.size()) return;

        // Fail first: branch on the uncovered element with the fewest
        // candidate sets.
        ElemId elem = -1;
        std::size_t fewest = std::numeric_limits<std::size_t>::max();
        for (std::size_t x = 0; x < inst.universe_size(); ++x) {
            if (covered.test(x)) continue;
            const std::size_t cands = inst.element_sets(static_cast<ElemId>(x)).size();
            if (cands < fewest) {
                fewest = cands;
                elem = static_cast<ElemId>(x);
            }
        }

        std::vector<std::pair<std::size_t, SetId>> candidates;
        for (SetId s : inst.element_sets(elem))
            candidates.emplace_back(inst.set_bits(s).count_and_not(covered), s);
        std::sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
            if (a.first != b.first) return a.first > b.first;
            return a.second < b.second;
        });

        const BitVector saved = covered;
        for (const auto& [gain, s] : candidates) {
            chosen.push_back(s);
            covered |= inst.set_bits(s);
            search();
            covered = saved;
            chosen.pop_back();
            if (aborted) return;
        }
    }
};

}  // namespace

ExactResult exact_min_cover(const Instance& instance, const OracleLimits& limits) {
    if (limits.max_sets == 0 || limits.max_nodes == 0)
        throw std::invalid_argument("oracle limits must be positive");
    if (instance.num_sets() > limits.max_sets)
        throw BuildError("exact_min_cover refuses instance '" + instance.name() + "': " +
                         std::to_string(instance.num_sets()) + " sets exceeds max_sets=" +
                         std::to_string(limits.max_sets));

    BranchAndBound bb(instance, limits);
    // Greedy gives a valid incumbent; the search may only replace it with
    // something smaller or lexicographically smaller at equal size.
    bb.best = greedy(instance).selected;
    std::sort(bb.best.begin(), bb.best.end());
    bb.search();

    ExactResult result;
    result.nodes_explored = bb.nodes;
    if (!bb.aborted) result.cover = Cover{instance.name(), std::move(bb.best)};
    return result;
}

}  // namespace wfcsc
