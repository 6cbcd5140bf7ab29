#include "wfcsc/wfc.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

#include "wfcsc/rng.hpp"

namespace wfcsc {

namespace {

void check_score_params(double exp, double c) {
    if (!(c > 0.0) || !std::isfinite(c) || !std::isfinite(exp))
        throw std::invalid_argument("score parameters require c > 0 and finite exp");
}

}  // namespace

WfcState::WfcState(const Instance& instance, const WfcParams& params)
    : instance_(&instance), params_(params), rng_(params.seed) {
    if (params_.scored) check_score_params(params_.exp, params_.c);

    const std::size_t m = instance.num_sets();
    const std::size_t n = instance.universe_size();

    active_sets_.resize(m);
    active_pos_.resize(m);
    for (std::size_t s = 0; s < m; ++s) {
        active_sets_[s] = static_cast<SetId>(s);
        active_pos_[s] = static_cast<std::int32_t>(s);
    }
    elem_active_.assign(n, 1);
    active_elem_count_ = n;

    containers_.resize(n);
    for (std::size_t x = 0; x < n; ++x)
        containers_[x] = static_cast<std::int32_t>(instance.element_sets(static_cast<ElemId>(x)).size());

    conflicts_.assign(m, 0);
    entropy_.assign(m, 0);
    for (std::size_t s = 0; s < m; ++s) {
        entropy_[s] = static_cast<std::int32_t>(instance.set_size(static_cast<SetId>(s)));
        std::int64_t conf = 0;
        for (ElemId x : instance.set_elements(static_cast<SetId>(s)))
            conf += containers_[static_cast<std::size_t>(x)] - 1;
        conflicts_[s] = conf;
    }

    // Elements covered by only one set force that set into the answer.
    std::vector<ElemId> forced;
    for (std::size_t x = 0; x < n; ++x)
        if (containers_[x] == 1) forced.push_back(static_cast<ElemId>(x));
    for (ElemId x : forced) {
        if (!elem_active(x)) continue;  // already covered by an earlier forced collapse
        assert(containers_[static_cast<std::size_t>(x)] == 1);
        for (SetId t : instance.element_sets(x)) {
            if (set_active(t)) {
                collapse(t);
                break;
            }
        }
    }
}

void WfcState::deactivate_set(SetId s) {
    const auto pos = active_pos_[static_cast<std::size_t>(s)];
    assert(pos >= 0);
    const SetId last = active_sets_.back();
    active_sets_[static_cast<std::size_t>(pos)] = last;
    active_pos_[static_cast<std::size_t>(last)] = pos;
    active_sets_.pop_back();
    active_pos_[static_cast<std::size_t>(s)] = -1;
}

SetId WfcState::pick(std::vector<SetId>& candidates) {
    assert(!candidates.empty());
    if (candidates.size() == 1 || params_.deterministic_ties)
        return candidates.front();  // candidates are sorted ascending
    return candidates[bounded_draw(rng_, candidates.size())];
}

SetId WfcState::observe() {
    if (active_sets_.empty())
        throw ContractViolation("observe: no active sets");
    auto& best = cand_buf_;
    best.clear();
    std::int64_t best_conf = 0;
    std::int32_t best_ent = 0;
    for (SetId s : active_sets_) {
        const auto su = static_cast<std::size_t>(s);
        if (best.empty()) {
            best.push_back(s);
            best_conf = conflicts_[su];
            best_ent = entropy_[su];
            continue;
        }
        // conflicts[s]/entropy[s] vs the incumbent average, exactly
        const std::int64_t lhs = conflicts_[su] * best_ent;
        const std::int64_t rhs = best_conf * entropy_[su];
        if (lhs > rhs || (lhs == rhs && entropy_[su] < best_ent)) {
            best.assign(1, s);
            best_conf = conflicts_[su];
            best_ent = entropy_[su];
        } else if (lhs == rhs && entropy_[su] == best_ent) {
            best.push_back(s);
        }
    }
    std::sort(best.begin(), best.end());
    return pick(best);
}

double WfcState::pow_conflicts(std::int64_t k, double c) {
    if (c != cached_c_ || pow_conflicts_cache_.empty()) {
        std::int64_t max_conf = 1;
        for (SetId s : active_sets_)
            max_conf = std::max(max_conf, conflicts_[static_cast<std::size_t>(s)]);
        pow_conflicts_cache_.assign(static_cast<std::size_t>(max_conf) + 1, -1.0);
        cached_c_ = c;
    }
    double& slot = pow_conflicts_cache_[static_cast<std::size_t>(k)];
    if (slot < 0.0) slot = std::pow(static_cast<double>(k), c);
    return slot;
}

double WfcState::pow_entropy(std::int32_t k, double exp) {
    if (exp != cached_exp_ || pow_entropy_cache_.empty()) {
        std::int32_t max_ent = 1;
        for (SetId s : active_sets_)
            max_ent = std::max(max_ent, entropy_[static_cast<std::size_t>(s)]);
        pow_entropy_cache_.assign(static_cast<std::size_t>(max_ent) + 1, -1.0);
        cached_exp_ = exp;
    }
    double& slot = pow_entropy_cache_[static_cast<std::size_t>(k)];
    if (slot < 0.0) slot = std::pow(static_cast<double>(k), exp);
    return slot;
}

SetId WfcState::observe_scored(double exp, double c) {
    if (active_sets_.empty())
        throw ContractViolation("observe: no active sets");
    check_score_params(exp, c);
    auto& best = cand_buf_;
    best.clear();
    double best_score = 0.0;
    std::int32_t best_ent = 0;
    for (SetId s : active_sets_) {
        const auto su = static_cast<std::size_t>(s);
        const double score =
            pow_conflicts(conflicts_[su], c) / pow_entropy(entropy_[su], exp);
        if (best.empty() || score > best_score) {
            best.assign(1, s);
            best_score = score;
            best_ent = entropy_[su];
        } else if (score == best_score) {
            if (entropy_[su] < best_ent) {
                best.assign(1, s);
                best_ent = entropy_[su];
            } else if (entropy_[su] == best_ent) {
                best.push_back(s);
            }
        }
    }
    std::sort(best.begin(), best.end());
    return pick(best);
}

void WfcState::propagate(SetId s) {
    if (!instance_->valid_set_id(s) || !set_active(s))
        throw ContractViolation("propagate: set is not active");
    deactivate_set(s);

    // Snapshot s's active elements; cascaded collapses below may deactivate
    // some of them mid-iteration.
    std::vector<ElemId> elems;
    for (ElemId x : instance_->set_elements(s))
        if (elem_active(x)) elems.push_back(x);

    std::vector<ElemId> uniques;
    for (ElemId x : elems) {
        auto& k = containers_[static_cast<std::size_t>(x)];
        --k;
        if (k <= 0)
            throw ContractViolation("propagate: active element lost its last container");
        for (SetId t : instance_->element_sets(x))
            if (set_active(t)) --conflicts_[static_cast<std::size_t>(t)];
        if (k == 1) uniques.push_back(x);
    }

    for (ElemId x : uniques) {
        if (!elem_active(x)) continue;
        assert(containers_[static_cast<std::size_t>(x)] == 1);
        for (SetId t : instance_->element_sets(x)) {
            if (set_active(t)) {
                collapse(t);
                break;
            }
        }
    }
}

void WfcState::collapse(SetId s) {
    if (!instance_->valid_set_id(s) || !set_active(s))
        throw ContractViolation("collapse: set is not active");
    ans_.push_back(s);

    std::vector<ElemId> elems;
    for (ElemId x : instance_->set_elements(s))
        if (elem_active(x)) elems.push_back(x);

    for (ElemId x : elems) {
        assert(elem_active(x));  // nothing below deactivates a snapshot element early
        const std::int64_t k = containers_[static_cast<std::size_t>(x)];
        for (SetId t : instance_->element_sets(x)) {
            if (!set_active(t)) continue;
            conflicts_[static_cast<std::size_t>(t)] -= k - 1;
            entropy_[static_cast<std::size_t>(t)] -= 1;
            if (entropy_[static_cast<std::size_t>(t)] == 0 && t != s)
                deactivate_set(t);  // no active elements left; pure removal
        }
        elem_active_[static_cast<std::size_t>(x)] = 0;
        --active_elem_count_;
    }
    deactivate_set(s);
}

AuditSnapshot WfcState::recompute_audit() const {
    AuditSnapshot snap;
    const std::size_t n = instance_->universe_size();
    for (std::size_t x = 0; x < n; ++x) {
        if (!elem_active(static_cast<ElemId>(x))) continue;
        std::int32_t k = 0;
        for (SetId t : instance_->element_sets(static_cast<ElemId>(x)))
            if (set_active(t)) ++k;
        snap.containers[static_cast<ElemId>(x)] = k;
    }
    for (SetId s : active_sets_) {
        std::int64_t conf = 0;
        std::int32_t ent = 0;
        for (ElemId x : instance_->set_elements(s)) {
            if (!elem_active(x)) continue;
            ++ent;
            conf += snap.containers.at(x) - 1;
        }
        snap.conflicts[s] = conf;
        snap.entropy[s] = ent;
    }
    return snap;
}

bool WfcState::audit_consistent() const {
    const AuditSnapshot snap = recompute_audit();
    if (snap.conflicts.size() != active_sets_.size()) return false;
    for (const auto& [s, conf] : snap.conflicts)
        if (conflicts(s) != conf || entropy(s) != snap.entropy.at(s)) return false;
    std::size_t active_elems = 0;
    for (const auto& [x, k] : snap.containers) {
        ++active_elems;
        if (containers(x) != k) return false;
    }
    return active_elems == active_elem_count_;
}

AuditSnapshot initial_counters(const Instance& instance) {
    AuditSnapshot snap;
    for (std::size_t x = 0; x < instance.universe_size(); ++x)
        snap.containers[static_cast<ElemId>(x)] =
            static_cast<std::int32_t>(instance.element_sets(static_cast<ElemId>(x)).size());
    for (std::size_t s = 0; s < instance.num_sets(); ++s) {
        std::int64_t conf = 0;
        for (ElemId x : instance.set_elements(static_cast<SetId>(s)))
            conf += snap.containers.at(x) - 1;
        snap.conflicts[static_cast<SetId>(s)] = conf;
        snap.entropy[static_cast<SetId>(s)] =
            static_cast<std::int32_t>(instance.set_size(static_cast<SetId>(s)));
    }
    return snap;
}

std::vector<SetId> observe_candidates(std::span<const SetId> active,
                                      std::span<const std::int64_t> conflicts,
                                      std::span<const std::int32_t> entropy) {
    std::vector<SetId> best;
    for (SetId s : active) {
        const auto su = static_cast<std::size_t>(s);
        if (best.empty()) {
            best.push_back(s);
            continue;
        }
        const auto bu = static_cast<std::size_t>(best.front());
        // conflicts[s]/entropy[s] vs conflicts[b]/entropy[b], exactly
        const std::int64_t lhs = conflicts[su] * entropy[bu];
        const std::int64_t rhs = conflicts[bu] * entropy[su];
        if (lhs > rhs) {
            best.assign(1, s);
        } else if (lhs == rhs) {
            if (entropy[su] < entropy[bu])
                best.assign(1, s);
            else if (entropy[su] == entropy[bu])
                best.push_back(s);
        }
    }
    std::sort(best.begin(), best.end());
    return best;
}

std::vector<SetId> observe_candidates_scored(std::span<const SetId> active,
                                             std::span<const std::int64_t> conflicts,
                                             std::span<const std::int32_t> entropy,
                                             double exp, double c) {
    std::vector<SetId> best;
    double best_score = 0.0;
    for (SetId s : active) {
        const auto su = static_cast<std::size_t>(s);
        const double score = std::pow(static_cast<double>(conflicts[su]), c) /
                             std::pow(static_cast<double>(entropy[su]), exp);
        if (best.empty() || score > best_score) {
            best.assign(1, s);
            best_score = score;
        } else if (score == best_score) {
            const auto bu = static_cast<std::size_t>(best.front());
            if (entropy[su] < entropy[bu])
                best.assign(1, s);
            else if (entropy[su] == entropy[bu])
                best.push_back(s);
        }
    }
    std::sort(best.begin(), best.end());
    return best;
}

Cover wfc_solve(const Instance& instance, const WfcParams& params) {
    WfcState state(instance, params);
    while (state.active_set_count() > 0) {
        const SetId s = params.scored ? state.observe_scored(params.exp, params.c)
                                      : state.observe();
        state.propagate(s);
    }
    return Cover{instance.name(), state.ans()};
}

}  // namespace wfcsc
