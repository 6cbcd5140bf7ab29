#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "fixtures.hpp"
#include "wfcsc/instance.hpp"
#include "wfcsc/oracle.hpp"
#include "wfcsc/rng.hpp"
#include "wfcsc/testing/random_instance.hpp"
#include "wfcsc/wfc.hpp"

using namespace wfcsc;

namespace {

// P2 and the conflicts/entropy floor, at a top-level operation boundary.
void check_floors(const WfcState& state) {
    const Instance& inst = state.instance();
    for (std::size_t x = 0; x < inst.universe_size(); ++x)
        if (state.elem_active(static_cast<ElemId>(x)))
            CHECK(state.containers(static_cast<ElemId>(x)) >= 2);
    for (SetId s : state.active_sets()) {
        CHECK(state.conflicts(s) >= state.entropy(s));
        CHECK(state.entropy(s) >= 1);
    }
}

}  // namespace

TEST_CASE("initial counters of the tiny instance") {
    const Instance inst = tests::tiny_instance();
    const AuditSnapshot snap = initial_counters(inst);
    CHECK(snap.conflicts == std::map<SetId, std::int64_t>{{0, 2}, {1, 4}, {2, 3}, {3, 3}});
    CHECK(snap.entropy == std::map<SetId, std::int32_t>{{0, 2}, {1, 3}, {2, 3}, {3, 2}});
    CHECK(snap.containers ==
          std::map<ElemId, std::int32_t>{{0, 2}, {1, 2}, {2, 3}, {3, 2}, {4, 1}});
}

TEST_CASE("init collapses the unique container of element 5") {
    const Instance inst = tests::tiny_instance();
    WfcState state(inst, WfcParams{});

    CHECK(state.ans() == std::vector<SetId>{2});
    CHECK_FALSE(state.set_active(2));
    CHECK(state.active_set_count() == 3);
    for (ElemId x : {1, 2, 4}) CHECK_FALSE(state.elem_active(x));

    CHECK(state.conflicts(0) == 2);
    CHECK(state.entropy(0) == 2);
    CHECK(state.conflicts(1) == 1);
    CHECK(state.entropy(1) == 1);
    CHECK(state.conflicts(3) == 1);
    CHECK(state.entropy(3) == 1);
    CHECK(state.audit_consistent());
    check_floors(state);
}

TEST_CASE("init on a single forced set empties the state") {
    const Instance inst = build_instance(1, {{1}}, "one");
    WfcState state(inst, WfcParams{});
    CHECK(state.active_set_count() == 0);
    CHECK(state.active_elem_count() == 0);
    CHECK(state.ans() == std::vector<SetId>{0});

    // Auditing an exhausted state yields empty maps.
    const AuditSnapshot snap = state.recompute_audit();
    CHECK(snap.conflicts.empty());
    CHECK(snap.entropy.empty());
    CHECK(snap.containers.empty());
}

TEST_CASE("observe rule on explicit counter arrays") {
    const std::vector<SetId> active{0, 1};

    // Strict maximum: 4/2 beats 2/2.
    std::vector<std::int64_t> conflicts{4, 2};
    std::vector<std::int32_t> entropy{2, 2};
    CHECK(observe_candidates(active, conflicts, entropy) == std::vector<SetId>{0});

    // Average tie at 1.0; lower entropy wins.
    conflicts = {3, 6};
    entropy = {3, 6};
    CHECK(observe_candidates(active, conflicts, entropy) == std::vector<SetId>{0});

    // Full tie keeps both.
    conflicts = {2, 2};
    entropy = {2, 2};
    CHECK(observe_candidates(active, conflicts, entropy) == std::vector<SetId>{0, 1});
}

TEST_CASE("scored observe rule on explicit counter arrays") {
    const std::vector<SetId> active{0, 1};
    const std::vector<std::int64_t> conflicts{4, 2};
    const std::vector<std::int32_t> entropy{2, 1};

    // exp=2, c=1: scores 1.0 vs 2.0.
    CHECK(observe_candidates_scored(active, conflicts, entropy, 2.0, 1.0) ==
          std::vector<SetId>{1});
    // exp=0 neutralizes entropy: scores 4.0 vs 2.0.
    CHECK(observe_candidates_scored(active, conflicts, entropy, 0.0, 1.0) ==
          std::vector<SetId>{0});
}

TEST_CASE("observe on the tiny instance after init") {
    const Instance inst = tests::tiny_instance();
    WfcState state(inst, WfcParams{});

    // All three active sets average 1.0; entropy drops set 0 and leaves the
    // seeded draw choosing between sets 1 and 3.
    std::vector<std::int64_t> conflicts;
    std::vector<std::int32_t> entropy;
    for (std::size_t s = 0; s < inst.num_sets(); ++s) {
        conflicts.push_back(state.conflicts(static_cast<SetId>(s)));
        entropy.push_back(state.entropy(static_cast<SetId>(s)));
    }
    CHECK(observe_candidates(state.active_sets(), conflicts, entropy) ==
          std::vector<SetId>{1, 3});

    const SetId s = state.observe();
    CHECK((s == 1 || s == 3));

    WfcParams det;
    det.deterministic_ties = true;
    WfcState dstate(inst, det);
    CHECK(dstate.observe() == 1);
}

TEST_CASE("propagate replays the worked trace") {
    const Instance inst = tests::tiny_instance();
    WfcState state(inst, WfcParams{});

    // Removing set 3 leaves element 4 uniquely in set 0, which collapses and
    // prunes set 1 at entropy zero.
    state.propagate(3);
    CHECK(state.active_set_count() == 0);
    CHECK(state.ans() == std::vector<SetId>{2, 0});
    CHECK(state.audit_consistent());
}

TEST_CASE("collapse subtracts containers-1 conflicts per deactivated element") {
    // Tiny instance plus {4,5}: no element has a unique container, so init
    // collapses nothing and collapse() can be driven from the full state.
    const Instance inst =
        build_instance(5, {{1, 4}, {1, 2, 3}, {2, 3, 5}, {3, 4}, {4, 5}}, "tiny5");
    WfcState state(inst, WfcParams{});
    REQUIRE(state.active_set_count() == 5);
    REQUIRE(state.ans().empty());

    state.collapse(2);  // deactivates elements 2, 3, 5

    CHECK(state.ans() == std::vector<SetId>{2});
    CHECK_FALSE(state.set_active(2));
    CHECK(state.conflicts(0) == 3);  // untouched: shares no element with set 2
    CHECK(state.entropy(0) == 2);
    CHECK(state.conflicts(1) == 1);
    CHECK(state.entropy(1) == 1);
    CHECK(state.conflicts(3) == 2);
    CHECK(state.entropy(3) == 1);
    CHECK(state.conflicts(4) == 2);
    CHECK(state.entropy(4) == 1);
    CHECK(state.audit_consistent());
    check_floors(state);
}

TEST_CASE("operation contract violations") {
    const Instance inst = tests::tiny_instance();
    WfcState state(inst, WfcParams{});
    CHECK_THROWS_AS(state.propagate(2), ContractViolation);  // inactive since init
    CHECK_THROWS_AS(state.collapse(2), ContractViolation);

    WfcState done(build_instance(1, {{1}}, "one"), WfcParams{});
    CHECK_THROWS_AS(done.observe(), ContractViolation);

    CHECK_THROWS_AS(state.observe_scored(1.0, 0.0), std::invalid_argument);
}

TEST_CASE("wfc_solve on the tiny instance finds the optimum for any seed") {
    const Instance inst = tests::tiny_instance();
    for (std::uint64_t seed = 0; seed < 16; ++seed) {
        WfcParams params;
        params.seed = seed;
        const Cover cover = wfc_solve(inst, params);
        CHECK(cover.size() == 2);
        CHECK(is_cover(inst, cover));
        CHECK(std::set<SetId>(cover.selected.begin(), cover.selected.end()) ==
              std::set<SetId>{0, 2});
    }
}

TEST_CASE("wfc_solve forces every singleton set") {
    std::vector<std::vector<int>> raw;
    for (int x = 1; x <= 7; ++x) raw.push_back({x});
    const Instance inst = build_instance(7, raw, "singletons");
    const Cover cover = wfc_solve(inst, WfcParams{});
    CHECK(cover.size() == 7);
}

TEST_CASE("audit equality and floors along full runs") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const Instance inst =
            testing::random_instance(10 + seed % 30, 8 + (seed * 7) % 40, 0.12, seed);
        WfcParams params;
        params.seed = seed;
        WfcState state(inst, params);
        CHECK(state.audit_consistent());
        check_floors(state);

        std::mt19937_64 driver(seed ^ 0xabcdef);
        std::size_t prev_active = state.active_set_count();
        std::size_t prev_ans = state.ans().size();
        std::vector<bool> was_deactivated(inst.universe_size(), false);
        while (state.active_set_count() > 0) {
            // Mostly the main loop's observe/propagate; sometimes an explicit
            // collapse of a random active set to exercise that path too.
            if (bounded_draw(driver, 4) == 0) {
                const auto actives = state.active_sets();
                state.collapse(actives[bounded_draw(driver, actives.size())]);
            } else {
                state.propagate(state.observe());
            }
            CHECK(state.audit_consistent());
            check_floors(state);
            // P3/P7: active sets strictly shrink, the answer never does, and
            // deactivated elements never come back.
            CHECK(state.active_set_count() < prev_active);
            CHECK(state.ans().size() >= prev_ans);
            for (std::size_t x = 0; x < inst.universe_size(); ++x) {
                if (!state.elem_active(static_cast<ElemId>(x)))
                    was_deactivated[x] = true;
                else
                    CHECK_FALSE(was_deactivated[x]);
            }
            prev_active = state.active_set_count();
            prev_ans = state.ans().size();
        }
        CHECK(state.active_elem_count() == 0);
        CHECK(is_cover(inst, Cover{inst.name(), state.ans()}));
    }
}

TEST_CASE("feasibility and determinism on random instances") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const Instance inst = testing::random_instance(25, 35, 0.1, seed);
        WfcParams params;
        params.seed = seed * 31 + 7;
        const Cover a = wfc_solve(inst, params);
        const Cover b = wfc_solve(inst, params);
        CHECK(is_cover(inst, a));
        CHECK(a.selected == b.selected);  // byte-for-byte reproducible
        CHECK(a.size() <= inst.num_sets());
    }
}

TEST_CASE("scored observe with exp=1 c=1 reduces to plain observe") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const Instance inst = testing::random_instance(20, 30, 0.15, seed);

        WfcParams plain;
        plain.seed = seed;
        WfcParams scored;
        scored.seed = seed;
        scored.scored = true;
        scored.exp = 1.0;
        scored.c = 1.0;
        CHECK(wfc_solve(inst, plain).selected == wfc_solve(inst, scored).selected);

        // Same argmax candidates at every step of a shared run.
        WfcState state(inst, plain);
        while (state.active_set_count() > 0) {
            std::vector<std::int64_t> conflicts;
            std::vector<std::int32_t> entropy;
            for (std::size_t s = 0; s < inst.num_sets(); ++s) {
                conflicts.push_back(state.conflicts(static_cast<SetId>(s)));
                entropy.push_back(state.entropy(static_cast<SetId>(s)));
            }
            CHECK(observe_candidates(state.active_sets(), conflicts, entropy) ==
                  observe_candidates_scored(state.active_sets(), conflicts, entropy, 1.0, 1.0));
            state.propagate(state.observe());
        }
    }
}

TEST_CASE("state observe paths agree with the standalone rule functions") {
    for (std::uint64_t seed = 0; seed < 15; ++seed) {
        const Instance inst = testing::random_instance(22, 28, 0.15, seed + 300);
        WfcParams params;
        params.deterministic_ties = true;
        params.scored = true;
        params.exp = 1.37;
        params.c = 0.9;
        WfcState state(inst, params);
        while (state.active_set_count() > 0) {
            std::vector<std::int64_t> conflicts;
            std::vector<std::int32_t> entropy;
            for (std::size_t s = 0; s < inst.num_sets(); ++s) {
                conflicts.push_back(state.conflicts(static_cast<SetId>(s)));
                entropy.push_back(state.entropy(static_cast<SetId>(s)));
            }
            const auto plain =
                observe_candidates(state.active_sets(), conflicts, entropy);
            CHECK(state.observe() == plain.front());
            const auto scored = observe_candidates_scored(state.active_sets(), conflicts,
                                                          entropy, params.exp, params.c);
            const SetId s = state.observe_scored(params.exp, params.c);
            CHECK(s == scored.front());
            state.propagate(s);
        }
    }
}

TEST_CASE("wfc never beats the exact oracle on small instances") {
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
        const Instance inst = testing::random_instance(12, 10, 0.2, seed);
        const Cover exact = brute_force_min_cover(inst);
        WfcParams params;
        params.seed = seed;
        CHECK(wfc_solve(inst, params).size() >= exact.size());
    }
}
