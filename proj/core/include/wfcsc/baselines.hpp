#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "wfcsc/hillclimb.hpp"
#include "wfcsc/instance.hpp"

namespace wfcsc {

// Repeatedly selects the set covering the most still-uncovered elements
// until the universe is covered. Ties go to the lowest set index, so the
// result is deterministic.
Cover greedy(const Instance& instance);

// Batched greedy: each round commits p sets at once, ranked by their
// individual new-element counts frozen at the start of the round. Once fewer
// than p sets remain, all of them are committed. p = 1 reduces to greedy.
Cover big_greedy(const Instance& instance, int p);

// NrOfUncoveredElements + |selection|.
std::size_t fitness(const Instance& instance, std::span<const SetId> selection);

struct TabuParams {
    int t = 10;        // tabu list capacity
    int n = 300000;    // iterations
    std::uint64_t seed = 0;
};

struct TabuResult {
    Cover best;
    int iterations_run = 0;
};

// Local search over single-set toggles. Starts from a feasible cover
// (classically the greedy answer), keeps the current selection no larger
// than one below the best cover found, forbids recently toggled sets via a
// FIFO tabu list, and always returns the best feasible cover seen.
//
// Each iteration applies the non-tabu toggle with the lowest resulting
// fitness (ties broken by a seeded draw). If every move is tabu or violates
// the size bound, the oldest tabu entry is evicted and the scan retried
// once; an iteration with no admissible move after that is a no-op.
//
// Throws BuildError if `initial` is not a cover.
TabuResult tabu_search(const Instance& instance, const Cover& initial, const TabuParams& params);

// Table-style pipeline: hill climbing's cover seeds tabu search in place of
// the greedy answer. Never worse than the hill climbing result.
Cover wfc_hc_tabu(const Instance& instance, const HillClimbParams& hc, const TabuParams& tabu);

namespace detail {

// FIFO memory of recently toggled sets with O(1) membership.
class TabuList {
public:
    TabuList(std::size_t capacity, std::size_t num_sets)
        : capacity_(capacity), member_(num_sets, 0) {}

    bool contains(SetId s) const { return member_[static_cast<std::size_t>(s)] != 0; }
    std::size_t size() const { return fifo_.size(); }

    void push(SetId s) {
        fifo_.push_back(s);
        member_[static_cast<std::size_t>(s)] = 1;
        if (fifo_.size() > capacity_) evict_oldest();
    }

    void evict_oldest() {
        if (fifo_.empty()) return;
        member_[static_cast<std::size_t>(fifo_.front())] = 0;
        fifo_.erase(fifo_.begin());
    }

private:
    std::size_t capacity_;
    std::vector<SetId> fifo_;
    std::vector<std::uint8_t> member_;
};

}  // namespace detail

}  // namespace wfcsc
