#pragma once

#include <cstdint>
#include <optional>

#include "wfcsc/instance.hpp"

namespace wfcsc {

struct OracleLimits {
    std::size_t max_sets = 64;
    std::uint64_t max_nodes = 10'000'000;
};

struct ExactResult {
    // Empty when the node budget ran out before optimality was proven.
    std::optional<Cover> cover;
    std::uint64_t nodes_explored = 0;

    bool optimal() const { return cover.has_value(); }
};

// Enumerates all 2^m subsets and returns a minimum-cardinality cover, the
// lexicographically smallest among minima. Refuses instances with more than
// 20 sets.
Cover brute_force_min_cover(const Instance& instance);

// Branch and bound on the uncovered element with the fewest candidate sets.
// Candidate sets are tried largest-first; a branch is pruned when
// |partial| + ceil(uncovered / max new elements per remaining set) exceeds
// the incumbent. Equal-size covers are kept when lexicographically smaller,
// so the optimum returned matches brute_force_min_cover exactly.
ExactResult exact_min_cover(const Instance& instance, const OracleLimits& limits = {});

}  // namespace wfcsc
