#include "wfcsc/bench.hpp"

#include <algorithm>
#include <cassert>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "wfcsc/rng.hpp"
#include "wfcsc/wfc.hpp"

namespace wfcsc {

std::string_view to_string(Algorithm a) {
    switch (a) {
        case Algorithm::greedy: return "greedy";
        case Algorithm::big_greedy: return "biggreedy";
        case Algorithm::tabu: return "tabu";
        case Algorithm::wfc: return "wfc";
        case Algorithm::wfc_hc: return "wfc-hc";
        case Algorithm::wfc_hc_tabu: return "wfc-hc-tabu";
    }
    return "?";
}

std::optional<Algorithm> algorithm_from_string(std::string_view name) {
    for (Algorithm a : {Algorithm::greedy, Algorithm::big_greedy, Algorithm::tabu, Algorithm::wfc,
                        Algorithm::wfc_hc, Algorithm::wfc_hc_tabu})
        if (name == to_string(a)) return a;
    return std::nullopt;
}

bool is_randomized(Algorithm a) {
    return a != Algorithm::greedy && a != Algorithm::big_greedy;
}

int default_runs(Algorithm a) { return is_randomized(a) ? 25 : 1; }

double default_conflicts_exponent(std::string_view instance_name) {
    return instance_name.starts_with("scp6") ? 0.7 : 0.9;
}

Cover run_algorithm(const Instance& instance, Algorithm algorithm, const SolverParams& params,
                    std::uint64_t run_seed) {
    switch (algorithm) {
        case Algorithm::greedy:
            return greedy(instance);
        case Algorithm::big_greedy:
            return big_greedy(instance, params.bg_p);
        case Algorithm::tabu: {
            TabuParams tp{params.tabu_t, params.tabu_n, run_seed};
            return tabu_search(instance, greedy(instance), tp).best;
        }
        case Algorithm::wfc: {
            WfcParams wp;
            wp.seed = run_seed;
            wp.deterministic_ties = params.deterministic_ties;
            return wfc_solve(instance, wp);
        }
        case Algorithm::wfc_hc: {
            HillClimbParams hp{params.hc_n, params.hc_exp0, params.hc_temp,
                               params.hc_c.value_or(default_conflicts_exponent(instance.name())),
                               run_seed, params.deterministic_ties};
            return hill_climb(instance, hp);
        }
        case Algorithm::wfc_hc_tabu: {
            HillClimbParams hp{params.hc_n, params.hc_exp0, params.hc_temp,
                               params.hc_c.value_or(default_conflicts_exponent(instance.name())),
                               run_seed, params.deterministic_ties};
            TabuParams tp{params.tabu_t, params.tabu_n, derive_seed(run_seed, 0x7ab0)};
            return wfc_hc_tabu(instance, hp, tp);
        }
    }
    throw std::invalid_argument("unknown algorithm");
}

BenchRecord bench_with_solver(const Instance& instance, std::string algorithm_label,
                              const SolverFn& solver, int runs, std::uint64_t master_seed,
                              Cover* best_out) {
    if (runs < 1) throw std::invalid_argument("runs must be >= 1");

    const auto check = [&](const Cover& cover, std::uint64_t run_seed) {
        const VerifyReport report = verify_solution(instance, cover);
        if (!report.feasible)
            throw std::runtime_error("solver bug: " + algorithm_label +
                                     " returned an infeasible cover on '" + instance.name() +
                                     "' (seed " + std::to_string(run_seed) + ")");
    };

    // Warm-up with run 0's seed, untimed.
    check(solver(instance, derive_seed(master_seed, 0)), derive_seed(master_seed, 0));

    BenchRecord rec;
    rec.instance_name = instance.name();
    rec.algorithm = std::move(algorithm_label);
    rec.runs = runs;
    rec.seed = master_seed;

    std::size_t worst = 0;
    double total_k = 0.0;
    double total_ns = 0.0;
    for (int r = 0; r < runs; ++r) {
        const std::uint64_t run_seed = derive_seed(master_seed, static_cast<std::uint64_t>(r));
        const auto start = std::chrono::steady_clock::now();
        const Cover cover = solver(instance, run_seed);
        const auto stop = std::chrono::steady_clock::now();
        check(cover, run_seed);

        const std::size_t k = cover.size();
        total_k += static_cast<double>(k);
        total_ns += static_cast<double>(
            std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
        if (r == 0 || k < rec.best_k) {
            rec.best_k = k;
            if (best_out) *best_out = cover;
        }
        worst = std::max(worst, k);
    }
    rec.k = rec.best_k;
    rec.mean_k = total_k / runs;
    rec.mean_time_ns = total_ns / runs;
    assert(static_cast<double>(rec.best_k) <= rec.mean_k && rec.mean_k <= static_cast<double>(worst));
    assert(rec.mean_time_ns > 0.0);
    return rec;
}

BenchRecord bench_instance(const Instance& instance, Algorithm algorithm,
                           const SolverParams& params, int runs, std::uint64_t master_seed,
                           Cover* best_out) {
    const SolverFn fn = [&](const Instance& inst, std::uint64_t run_seed) {
        return run_algorithm(inst, algorithm, params, run_seed);
    };
    return bench_with_solver(instance, std::string(to_string(algorithm)), fn,
                             runs > 0 ? runs : default_runs(algorithm), master_seed, best_out);
}

BenchOutcome run_benchmark(const BenchConfig& config) {
    BenchOutcome outcome;
    for (const std::string& path : config.files) {
        std::optional<Instance> instance;
        try {
            std::ifstream in(path, std::ios::binary);
            if (!in) throw std::runtime_error("cannot open file");
            std::ostringstream buf;
            buf << in.rdbuf();
            instance = parse_orlib(buf.str(), std::filesystem::path(path).stem().string(),
                                   config.format_hint);
        } catch (const std::exception& e) {
            outcome.failures.push_back({path, e.what()});
            continue;
        }
        for (Algorithm a : config.algorithms)
            outcome.records.push_back(
                bench_instance(*instance, a, config.params, config.runs, config.seed));
    }
    return outcome;
}

namespace {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string format_ms(double ns) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", ns / 1e6);
    return buf;
}

bool has_best_column(std::string_view algorithm) {
    return algorithm.find("tabu") != std::string_view::npos;
}

std::string emit_csv(const std::vector<BenchRecord>& records) {
    std::ostringstream out;
    out << "instance,algorithm,k,mean_k,best_k,runs,mean_time_ns,seed\n";
    for (const auto& r : records) {
        out << r.instance_name << ',' << r.algorithm << ',' << r.k << ','
            << format_double(r.mean_k) << ',' << r.best_k << ',' << r.runs << ','
            << format_double(r.mean_time_ns) << ',' << r.seed << '\n';
    }
    return out.str();
}

std::string emit_markdown(const std::vector<BenchRecord>& records) {
    // Preserve first-appearance order for both axes.
    std::vector<std::string> instances, algorithms;
    for (const auto& r : records) {
        if (std::find(instances.begin(), instances.end(), r.instance_name) == instances.end())
            instances.push_back(r.instance_name);
        if (std::find(algorithms.begin(), algorithms.end(), r.algorithm) == algorithms.end())
            algorithms.push_back(r.algorithm);
    }

    std::ostringstream out;
    out << "| Test Set |";
    for (const auto& a : algorithms) {
        out << ' ' << a << " k | " << a << " mean k |";
        if (has_best_column(a)) out << ' ' << a << " best |";
        out << ' ' << a << " mean time (ms) |";
    }
    out << '\n';
    out << "|---|";
    for (const auto& a : algorithms) {
        out << "---|---|";
        if (has_best_column(a)) out << "---|";
        out << "---|";
    }
    out << '\n';

    for (const auto& inst : instances) {
        out << "| " << inst << " |";
        for (const auto& a : algorithms) {
            const BenchRecord* rec = nullptr;
            for (const auto& r : records)
                if (r.instance_name == inst && r.algorithm == a) {
                    rec = &r;
                    break;
                }
            if (rec) {
                char mean_buf[64];
                std::snprintf(mean_buf, sizeof mean_buf, "%.2f", rec->mean_k);
                out << ' ' << rec->k << " | " << mean_buf << " |";
                if (has_best_column(a)) out << ' ' << rec->best_k << " |";
                out << ' ' << format_ms(rec->mean_time_ns) << " |";
            } else {
                out << " - | - |";
                if (has_best_column(a)) out << " - |";
                out << " - |";
            }
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace

std::string emit_table(const std::vector<BenchRecord>& records, TableFormat format) {
    if (records.empty()) throw std::invalid_argument("emit_table: no records");
    return format == TableFormat::csv ? emit_csv(records) : emit_markdown(records);
}

namespace {

std::vector<std::string> split(std::string_view line, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
        if (i == line.size() || line[i] == sep) {
            out.emplace_back(line.substr(start, i - start));
            start = i + 1;
        }
    }
    return out;
}

template <typename T>
T parse_number(const std::string& field, const char* what) {
    T value{};
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size())
        throw std::runtime_error(std::string("bad CSV field for ") + what + ": '" + field + "'");
    return value;
}

}  // namespace

std::vector<BenchRecord> parse_records_csv(std::string_view text) {
    std::vector<BenchRecord> records;
    std::size_t line_start = 0;
    bool header_seen = false;
    while (line_start < text.size()) {
        std::size_t line_end = text.find('\n', line_start);
        if (line_end == std::string_view::npos) line_end = text.size();
        const std::string_view line = text.substr(line_start, line_end - line_start);
        line_start = line_end + 1;
        if (line.empty()) continue;
        if (!header_seen) {
            if (line != "instance,algorithm,k,mean_k,best_k,runs,mean_time_ns,seed")
                throw std::runtime_error("unexpected CSV header: '" + std::string(line) + "'");
            header_seen = true;
            continue;
        }
        const auto fields = split(line, ',');
        if (fields.size() != 8)
            throw std::runtime_error("expected 8 CSV fields, got " +
                                     std::to_string(fields.size()));
        BenchRecord r;
        r.instance_name = fields[0];
        r.algorithm = fields[1];
        r.k = parse_number<std::size_t>(fields[2], "k");
        r.mean_k = parse_number<double>(fields[3], "mean_k");
        r.best_k = parse_number<std::size_t>(fields[4], "best_k");
        r.runs = parse_number<int>(fields[5], "runs");
        r.mean_time_ns = parse_number<double>(fields[6], "mean_time_ns");
        r.seed = parse_number<std::uint64_t>(fields[7], "seed");
        records.push_back(std::move(r));
    }
    if (!header_seen) throw std::runtime_error("empty CSV: missing header");
    return records;
}

}  // namespace wfcsc
