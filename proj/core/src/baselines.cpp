#include "wfcsc/baselines.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <stdexcept>

#include "wfcsc/rng.hpp"

namespace wfcsc {

Cover greedy(const Instance& instance) {
    const std::size_t m = instance.num_sets();
    BitVector uncovered(instance.universe_size());
    uncovered.set_all();

    Cover cover{instance.name(), {}};
    std::vector<std::uint8_t> selected(m, 0);

    while (uncovered.any()) {
        SetId best = -1;
        std::size_t best_gain = 0;
        for (std::size_t s = 0; s < m; ++s) {
            if (selected[s]) continue;
            const std::size_t gain = instance.set_bits(static_cast<SetId>(s)).count_and(uncovered);
            if (gain > best_gain) {
                best_gain = gain;
                best = static_cast<SetId>(s);
            }
        }
        assert(best >= 0);  // the family covers the universe, so progress is always possible
        selected[static_cast<std::size_t>(best)] = 1;
        cover.selected.push_back(best);
        uncovered.and_not(instance.set_bits(best));
    }
    return cover;
}

Cover big_greedy(const Instance& instance, int p) {
    if (p < 1) throw std::invalid_argument("big_greedy requires p >= 1");

    const std::size_t m = instance.num_sets();
    BitVector uncovered(instance.universe_size());
    uncovered.set_all();

    Cover cover{instance.name(), {}};
    std::vector<std::uint8_t> selected(m, 0);
    std::size_t remaining = m;

    while (uncovered.any()) {
        if (static_cast<std::size_t>(p) > remaining) {
            // Commit everything that is left.
            for (std::size_t s = 0; s < m; ++s) {
                if (selected[s]) continue;
                selected[s] = 1;
                cover.selected.push_back(static_cast<SetId>(s));
                uncovered.and_not(instance.set_bits(static_cast<SetId>(s)));
            }
            remaining = 0;
            break;
        }
        // Rank by new-element counts frozen at the start of the round.
        std::vector<std::pair<std::size_t, SetId>> ranked;
        ranked.reserve(remaining);
        for (std::size_t s = 0; s < m; ++s) {
            if (selected[s]) continue;
            ranked.emplace_back(instance.set_bits(static_cast<SetId>(s)).count_and(uncovered),
                                static_cast<SetId>(s));
        }
        std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
            if (a.first != b.first) return a.first > b.first;
            return a.second < b.second;
        });
        for (int i = 0; i < p; ++i) {
            const SetId s = ranked[static_cast<std::size_t>(i)].second;
            selected[static_cast<std::size_t>(s)] = 1;
            cover.selected.push_back(s);
            uncovered.and_not(instance.set_bits(s));
            --remaining;
        }
    }
    return cover;
}

std::size_t fitness(const Instance& instance, std::span<const SetId> selection) {
    return uncovered_count(instance, selection) + selection.size();
}

namespace {

// Current tabu selection with per-element coverage multiplicity, so a
// toggle's fitness delta is O(|set|).
struct ToggleState {
    explicit ToggleState(const Instance& inst)
        : instance(&inst),
          in_selection(inst.num_sets(), 0),
          cover_count(inst.universe_size(), 0),
          uncovered(inst.universe_size()) {}

    const Instance* instance;
    std::vector<std::uint8_t> in_selection;
    std::vector<std::int32_t> cover_count;
    std::size_t uncovered;
    std::size_t selection_size = 0;

    void add(SetId s) {
        assert(!in_selection[static_cast<std::size_t>(s)]);
        in_selection[static_cast<std::size_t>(s)] = 1;
        ++selection_size;
        for (ElemId x : instance->set_elements(s))
            if (cover_count[static_cast<std::size_t>(x)]++ == 0) --uncovered;
    }

    void remove(SetId s) {
        assert(in_selection[static_cast<std::size_t>(s)]);
        in_selection[static_cast<std::size_t>(s)] = 0;
        --selection_size;
        for (ElemId x : instance->set_elements(s))
            if (--cover_count[static_cast<std::size_t>(x)] == 0) ++uncovered;
    }

    // Fitness after toggling s, without applying the move.
    std::size_t toggled_fitness(SetId s) const {
        std::size_t delta = 0;
        if (in_selection[static_cast<std::size_t>(s)]) {
            for (ElemId x : instance->set_elements(s))
                if (cover_count[static_cast<std::size_t>(x)] == 1) ++delta;
            return (uncovered + delta) + (selection_size - 1);
        }
        for (ElemId x : instance->set_elements(s))
            if (cover_count[static_cast<std::size_t>(x)] == 0) ++delta;
        return (uncovered - delta) + (selection_size + 1);
    }

    std::vector<SetId> sorted_selection() const {
        std::vector<SetId> out;
        for (std::size_t s = 0; s < in_selection.size(); ++s)
            if (in_selection[s]) out.push_back(static_cast<SetId>(s));
        return out;
    }
};

}  // namespace

TabuResult tabu_search(const Instance& instance, const Cover& initial, const TabuParams& params) {
    if (params.t < 1 || params.n < 0)
        throw std::invalid_argument("tabu_search requires t >= 1 and n >= 0");
    if (!is_cover(instance, initial))
        throw BuildError("tabu_search: initial selection does not cover the universe");

    const std::size_t m = instance.num_sets();
    ToggleState state(instance);
    for (SetId s : initial.selected)
        if (!state.in_selection[static_cast<std::size_t>(s)]) state.add(s);

    Cover best = initial;  // untouched until a strictly smaller cover is found
    std::size_t bound = state.selection_size - 1;  // max allowed selection size

    detail::TabuList tabu(static_cast<std::size_t>(params.t), m);
    std::mt19937_64 rng(params.seed);
    std::vector<SetId> ties;

    for (int iter = 0; iter < params.n; ++iter) {
        SetId chosen = -1;
        for (int attempt = 0; attempt < 2; ++attempt) {
            std::size_t best_fitness = std::numeric_limits<std::size_t>::max();
            ties.clear();
            for (std::size_t su = 0; su < m; ++su) {
                const SetId s = static_cast<SetId>(su);
                if (tabu.contains(s)) continue;
                const std::size_t new_size =
                    state.in_selection[su] ? state.selection_size - 1 : state.selection_size + 1;
                if (new_size > bound) continue;
                const std::size_t f = state.toggled_fitness(s);
                if (f < best_fitness) {
                    best_fitness = f;
                    ties.assign(1, s);
                } else if (f == best_fitness) {
                    ties.push_back(s);
                }
            }
            if (!ties.empty()) {
                chosen = ties[bounded_draw(rng, ties.size())];
                break;
            }
            tabu.evict_oldest();  // deadlock: free the oldest move and rescan once
        }
        if (chosen < 0) continue;  // still no admissible move; no-op iteration

        if (state.in_selection[static_cast<std::size_t>(chosen)])
            state.remove(chosen);
        else
            state.add(chosen);
        tabu.push(chosen);

        if (state.uncovered == 0) {
            best.selected = state.sorted_selection();
            assert(best.size() <= bound);
            bound = best.size() - 1;
        }
    }

    return TabuResult{std::move(best), params.n};
}

Cover wfc_hc_tabu(const Instance& instance, const HillClimbParams& hc, const TabuParams& tabu) {
    const Cover seed_cover = hill_climb(instance, hc);
    return tabu_search(instance, seed_cover, tabu).best;
}

}  // namespace wfcsc
