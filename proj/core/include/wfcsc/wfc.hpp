#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <vector>

#include "wfcsc/instance.hpp"

namespace wfcsc {

struct WfcParams {
    std::uint64_t seed = 0;
    // Plain observe ranks by average conflicts; the scored variant ranks by
    // conflicts^c / entropy^exp.
    bool scored = false;
    double exp = 1.0;
    double c = 0.9;
    // Break final ties by lowest set index instead of a seeded draw
    // (regression mode).
    bool deterministic_ties = false;
};

// From-scratch recomputation of the solver counters, keyed by the active
// sets/elements only. Serves as the oracle for the incremental state.
struct AuditSnapshot {
    std::map<SetId, std::int64_t> conflicts;
    std::map<SetId, std::int32_t> entropy;
    std::map<ElemId, std::int32_t> containers;
};

// Mutable solver state for one run. Tracks, incrementally:
//   containers[x] - number of active sets containing active element x
//   entropy[s]    - number of active elements in active set s
//   conflicts[s]  - sum over s's active elements x of (containers[x] - 1)
//
// Between top-level operations every active element has containers >= 2
// (a unique container is collapsed immediately), hence every active set has
// conflicts >= entropy >= 1.
//
// Single-threaded: one state per solver run, exclusively owned. Concurrent
// runs may share the underlying Instance.
class WfcState {
public:
    WfcState(const Instance& instance, const WfcParams& params);

    const Instance& instance() const { return *instance_; }

    bool set_active(SetId s) const { return active_pos_[static_cast<std::size_t>(s)] >= 0; }
    bool elem_active(ElemId x) const { return elem_active_[static_cast<std::size_t>(x)] != 0; }
    std::int64_t conflicts(SetId s) const { return conflicts_[static_cast<std::size_t>(s)]; }
    std::int32_t entropy(SetId s) const { return entropy_[static_cast<std::size_t>(s)]; }
    std::int32_t containers(ElemId x) const { return containers_[static_cast<std::size_t>(x)]; }

    std::span<const SetId> active_sets() const { return active_sets_; }
    std::size_t active_set_count() const { return active_sets_.size(); }
    std::size_t active_elem_count() const { return active_elem_count_; }
    const std::vector<SetId>& ans() const { return ans_; }

    // The active set with the highest average conflicts (conflicts/entropy);
    // ties broken by lowest entropy, remaining ties by a seeded uniform draw.
    // Throws ContractViolation when no set is active.
    SetId observe();

    // As observe, but ranks by conflicts^c / entropy^exp. Scores are compared
    // as exact floating-point values; the tie order is identical to observe.
    SetId observe_scored(double exp, double c);

    // Deactivates s without adding it to the answer. Every other active
    // container of each of s's active elements loses one conflict; elements
    // left with a unique container trigger collapses, processed FIFO.
    void propagate(SetId s);

    // Commits s to the answer and deactivates it together with its active
    // elements. Each surviving container of such an element x loses
    // (containers[x] - 1) conflicts and one entropy; sets whose entropy
    // reaches zero are dropped from consideration.
    void collapse(SetId s);

    AuditSnapshot recompute_audit() const;

    // Incremental counters match recompute_audit exactly.
    bool audit_consistent() const;

private:
    SetId pick(std::vector<SetId>& candidates);
    void deactivate_set(SetId s);
    double pow_conflicts(std::int64_t k, double c);
    double pow_entropy(std::int32_t k, double exp);

    const Instance* instance_;
    WfcParams params_;
    std::vector<SetId> active_sets_;        // unordered, swap-removed
    std::vector<std::int32_t> active_pos_;  // position in active_sets_, -1 if inactive
    std::vector<std::uint8_t> elem_active_;
    std::size_t active_elem_count_ = 0;
    std::vector<std::int64_t> conflicts_;
    std::vector<std::int32_t> entropy_;
    std::vector<std::int32_t> containers_;
    std::vector<SetId> ans_;
    std::mt19937_64 rng_;
    std::vector<SetId> cand_buf_;

    // Memoized pow values for the scored observe: counters are small
    // integers that only ever shrink, so pow(k, .) is cached per exponent.
    // Lookups are bit-identical to calling pow directly.
    std::vector<double> pow_conflicts_cache_;
    std::vector<double> pow_entropy_cache_;
    double cached_c_ = 0.0;
    double cached_exp_ = 0.0;
};

// Counters for the all-active configuration: what init starts from before
// forced unique-container collapses run.
AuditSnapshot initial_counters(const Instance& instance);

// Candidates surviving the observe ranking (max average conflicts, then
// lowest entropy), in ascending id order. Exposed for direct rule tests;
// comparisons are exact integer cross-multiplications.
std::vector<SetId> observe_candidates(std::span<const SetId> active,
                                      std::span<const std::int64_t> conflicts,
                                      std::span<const std::int32_t> entropy);

// Scored-rule counterpart: max conflicts^c / entropy^exp, then lowest
// entropy. Score equality means exact floating-point equality.
std::vector<SetId> observe_candidates_scored(std::span<const SetId> active,
                                             std::span<const std::int64_t> conflicts,
                                             std::span<const std::int32_t> entropy,
                                             double exp, double c);

// Full heuristic: init, then { observe; propagate } until no set is active.
// The result always covers the universe.
Cover wfc_solve(const Instance& instance, const WfcParams& params);

}  // namespace wfcsc
