#include <doctest.h>

#include <vector>

#include "fixtures.hpp"
#include "wfcsc/baselines.hpp"
#include "wfcsc/oracle.hpp"
#include "wfcsc/testing/random_instance.hpp"

using namespace wfcsc;

TEST_CASE("brute force enumerates the tiny optimum") {
    const Instance inst = tests::tiny_instance();
    const Cover best = brute_force_min_cover(inst);
    CHECK(best.selected == std::vector<SetId>{0, 2});
}

TEST_CASE("brute force trivial shapes") {
    CHECK(brute_force_min_cover(build_instance(3, {{1, 2, 3}}, "one")).size() == 1);
    CHECK(brute_force_min_cover(build_instance(3, {{1}, {2}, {3}}, "forced")).size() == 3);
}

TEST_CASE("brute force refuses more than 20 sets") {
    std::vector<std::vector<int>> raw(21, std::vector<int>{1});
    const Instance inst = build_instance(1, raw, "wide");
    CHECK_THROWS_AS(brute_force_min_cover(inst), BuildError);
}

TEST_CASE("lexicographic tie-break among equal optima") {
    // {0,1} and {2,3} both cover; the lexicographically smaller pair wins.
    const Instance inst =
        build_instance(4, {{1, 2}, {3, 4}, {1, 3}, {2, 4}}, "ties");
    CHECK(brute_force_min_cover(inst).selected == std::vector<SetId>{0, 1});
    const ExactResult exact = exact_min_cover(inst);
    REQUIRE(exact.optimal());
    CHECK(exact.cover->selected == std::vector<SetId>{0, 1});
}

TEST_CASE("branch and bound matches the tiny optimum") {
    const Instance inst = tests::tiny_instance();
    const ExactResult result = exact_min_cover(inst);
    REQUIRE(result.optimal());
    CHECK(result.cover->selected == std::vector<SetId>{0, 2});
    CHECK(is_cover(inst, *result.cover));
}

TEST_CASE("a universe-sized set closes the bound immediately") {
    const Instance inst = build_instance(6, {{1, 2, 3}, {1, 2, 3, 4, 5, 6}, {4, 6}}, "whole");
    const ExactResult result = exact_min_cover(inst);
    REQUIRE(result.optimal());
    CHECK(result.cover->size() == 1);
}

TEST_CASE("exact and brute force agree on random instances") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const Instance inst = testing::random_instance(12, 12, 0.18, seed);
        const Cover brute = brute_force_min_cover(inst);
        const ExactResult exact = exact_min_cover(inst);
        REQUIRE(exact.optimal());
        CHECK(exact.cover->size() == brute.size());
        CHECK(exact.cover->selected == brute.selected);  // both lexicographic minima
        CHECK(is_cover(inst, *exact.cover));
    }
}

TEST_CASE("heuristics never beat the oracle") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const Instance inst = testing::random_instance(14, 13, 0.2, seed + 50);
        const std::size_t opt = exact_min_cover(inst).cover->size();
        CHECK(greedy(inst).size() >= opt);
        CHECK(big_greedy(inst, 3).size() >= opt);
    }
}

TEST_CASE("node budget exhaustion is reported as unknown") {
    // Root bound 2 < greedy's 3, so the search must branch and immediately
    // overruns a one-node budget.
    const Instance inst = tests::tiny_instance();
    OracleLimits limits;
    limits.max_nodes = 1;
    const ExactResult result = exact_min_cover(inst, limits);
    CHECK_FALSE(result.optimal());
    CHECK(result.nodes_explored >= 1);
}

TEST_CASE("oracle limits are enforced") {
    const Instance inst = testing::random_instance(10, 30, 0.3, 9);
    OracleLimits limits;
    limits.max_sets = 20;
    CHECK_THROWS_AS(exact_min_cover(inst, limits), BuildError);
    limits.max_sets = 0;
    CHECK_THROWS_AS(exact_min_cover(inst, limits), std::invalid_argument);
}
