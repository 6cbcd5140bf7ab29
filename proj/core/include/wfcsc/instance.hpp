#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "wfcsc/bitvector.hpp"
#include "wfcsc/errors.hpp"

namespace wfcsc {

using SetId = std::int32_t;
using ElemId = std::int32_t;

// An ordered list of selected set identifiers claimed to cover the universe.
// Identifiers are 0-based; conversion to the 1-based external convention
// happens only at I/O boundaries.
struct Cover {
    std::string instance_name;
    std::vector<SetId> selected;

    std::size_t size() const { return selected.size(); }
};

// How much normalization build_instance had to do on the raw input.
struct BuildStats {
    int empty_sets_dropped = 0;
    int duplicate_elements_collapsed = 0;
};

// Immutable set-cover instance: a universe of n elements and an ordered
// family of m subsets, with both incidence directions available as bit
// vectors plus plain index lists for the solvers' inner loops.
//
// Invariants (enforced at construction, re-checkable via audit()):
//   - the union of all sets equals the universe
//   - element_to_sets is the exact transpose of sets
//   - no set is empty; duplicate elements within a set are collapsed
//
// Instances are immutable after construction and safe to share across
// concurrent solver runs.
class Instance {
public:
    std::size_t universe_size() const { return universe_size_; }
    std::size_t num_sets() const { return sets_.size(); }
    const std::string& name() const { return name_; }

    const BitVector& set_bits(SetId s) const { return sets_[static_cast<std::size_t>(s)]; }
    const BitVector& element_bits(ElemId x) const { return element_to_sets_[static_cast<std::size_t>(x)]; }

    std::span<const ElemId> set_elements(SetId s) const {
        return set_elements_[static_cast<std::size_t>(s)];
    }
    std::span<const SetId> element_sets(ElemId x) const {
        return element_sets_[static_cast<std::size_t>(x)];
    }

    std::size_t set_size(SetId s) const { return set_elements_[static_cast<std::size_t>(s)].size(); }

    bool valid_set_id(SetId s) const {
        return s >= 0 && static_cast<std::size_t>(s) < sets_.size();
    }

    // Re-verifies the construction invariants from scratch.
    bool audit() const;

    friend Instance build_instance(std::size_t universe_size,
                                   const std::vector<std::vector<int>>& raw_sets,
                                   std::string name, BuildStats* stats);

private:
    Instance() = default;

    std::size_t universe_size_ = 0;
    std::string name_;
    std::vector<BitVector> sets_;             // per set: bits over elements
    std::vector<BitVector> element_to_sets_;  // per element: bits over sets
    std::vector<std::vector<ElemId>> set_elements_;
    std::vector<std::vector<SetId>> element_sets_;
};

// Builds an Instance from 1-based raw element lists. Empty input sets are
// dropped (they can never help a cover) and duplicate elements within one
// set are collapsed; both are counted in *stats when given.
//
// Throws BuildError if universe_size < 1, an element is out of 1..n, or the
// union of the sets does not equal the universe.
Instance build_instance(std::size_t universe_size,
                        const std::vector<std::vector<int>>& raw_sets,
                        std::string name, BuildStats* stats = nullptr);

// True iff the union of the selected sets equals the universe.
// Throws BuildError on an unknown set identifier.
bool is_cover(const Instance& instance, const Cover& selection);

// Number of universe elements not covered by the selection.
std::size_t uncovered_count(const Instance& instance, std::span<const SetId> selection);

}  // namespace wfcsc
