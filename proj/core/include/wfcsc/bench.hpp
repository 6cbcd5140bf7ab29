#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wfcsc/baselines.hpp"
#include "wfcsc/instance.hpp"
#include "wfcsc/orlib.hpp"

namespace wfcsc {

enum class Algorithm { greedy, big_greedy, tabu, wfc, wfc_hc, wfc_hc_tabu };

std::string_view to_string(Algorithm a);
std::optional<Algorithm> algorithm_from_string(std::string_view name);

// Deterministic algorithms default to a single repetition; randomized ones
// to 25.
bool is_randomized(Algorithm a);
int default_runs(Algorithm a);

// Per-algorithm knobs, flat so the CLI can surface them as flags.
struct SolverParams {
    int bg_p = 2;              // big greedy batch size
    int tabu_t = 10;           // tabu list capacity
    int tabu_n = 300000;       // tabu iterations
    int hc_n = 100;            // hill climbing iterations
    double hc_exp0 = 1.0;      // initial entropy exponent
    double hc_temp = 0.1;      // initial temperature
    std::optional<double> hc_c;  // conflicts exponent; per-instance default when unset
    bool deterministic_ties = false;
};

// Conflicts exponent used when none is requested explicitly: 0.7 for the
// scp6x family, 0.9 otherwise.
double default_conflicts_exponent(std::string_view instance_name);

// One seeded execution of an algorithm.
Cover run_algorithm(const Instance& instance, Algorithm algorithm, const SolverParams& params,
                    std::uint64_t run_seed);

// One (instance, algorithm) result row.
struct BenchRecord {
    std::string instance_name;
    std::string algorithm;
    std::size_t k = 0;        // best cover size over runs
    double mean_k = 0.0;
    std::size_t best_k = 0;   // minimum over runs
    int runs = 0;
    double mean_time_ns = 0.0;
    std::uint64_t seed = 0;   // master seed

    bool operator==(const BenchRecord&) const = default;
};

using SolverFn = std::function<Cover(const Instance&, std::uint64_t run_seed)>;

// Executes `runs` seeded repetitions (run r uses a seed derived from the
// master seed and r), timing each with a monotonic clock after one untimed
// warm-up. Every produced cover is verified; an infeasible one aborts the
// record with an exception, since it can only mean a solver bug. When given,
// *best_out receives the smallest cover seen (first such run wins ties).
BenchRecord bench_with_solver(const Instance& instance, std::string algorithm_label,
                              const SolverFn& solver, int runs, std::uint64_t master_seed,
                              Cover* best_out = nullptr);

BenchRecord bench_instance(const Instance& instance, Algorithm algorithm,
                           const SolverParams& params, int runs, std::uint64_t master_seed,
                           Cover* best_out = nullptr);

struct BenchConfig {
    std::vector<std::string> files;
    std::vector<Algorithm> algorithms;
    SolverParams params;
    int runs = 0;  // 0 = per-algorithm default
    std::uint64_t seed = 0;
    std::optional<OrlibFormat> format_hint;
};

struct BenchFailure {
    std::string file;
    std::string error;
};

struct BenchOutcome {
    std::vector<BenchRecord> records;
    std::vector<BenchFailure> failures;  // per-file parse problems; other files continue
};

BenchOutcome run_benchmark(const BenchConfig& config);

enum class TableFormat { csv, markdown };

// CSV: one header row, fields in BenchRecord order, byte-stable for equal
// records. Markdown: one row per instance with per-algorithm column groups
// (k, mean k, mean time, plus best for tabu-style algorithms).
std::string emit_table(const std::vector<BenchRecord>& records, TableFormat format);

// Inverse of the CSV emitter; round-trips exactly.
std::vector<BenchRecord> parse_records_csv(std::string_view text);

}  // namespace wfcsc
