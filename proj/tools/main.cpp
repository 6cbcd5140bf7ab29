#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "wfcsc/bench.hpp"
#include "wfcsc/oracle.hpp"
#include "wfcsc/orlib.hpp"

namespace fs = std::filesystem;
using namespace wfcsc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;       // parse or solver failure, infeasible verify
constexpr int kExitRefused = 2;       // instance outside oracle limits
constexpr int kExitUnknown = 3;       // oracle node budget exhausted
constexpr int kExitPartial = 4;       // bench finished but some files failed

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::optional<OrlibFormat> parse_hint(const std::string& format) {
    if (format == "row") return OrlibFormat::row_major;
    if (format == "col") return OrlibFormat::column_major;
    return std::nullopt;  // "auto"
}

Instance load_instance(const std::string& path, const std::string& format) {
    const std::string name = fs::path(path).stem().string();
    BuildStats stats;
    const Instance inst = parse_orlib(read_file(path), name, parse_hint(format), &stats);
    std::cerr << "note: " << name << ": column costs ignored (unicost)\n";
    if (stats.empty_sets_dropped > 0)
        std::cerr << "note: " << name << ": dropped " << stats.empty_sets_dropped
                  << " empty column(s)\n";
    if (stats.duplicate_elements_collapsed > 0)
        std::cerr << "note: " << name << ": collapsed " << stats.duplicate_elements_collapsed
                  << " duplicate row entries\n";
    return inst;
}

void print_selected(std::ostream& out, const std::vector<SetId>& selected) {
    for (std::size_t i = 0; i < selected.size(); ++i)
        out << (selected[i] + 1) << (i + 1 == selected.size() ? '\n' : ' ');
}

struct SolveOptions {
    std::string file;
    std::string algo = "wfc-hc";
    std::string format = "auto";
    SolverParams params;
    double hc_c_flag = -1.0;  // <0: use the per-instance default rule
    std::uint64_t seed = 0;
    int runs = 0;
    bool deterministic = false;
    bool print_sets = false;
    std::string out_path;
};

int run_solve(const SolveOptions& opt) {
    const auto algorithm = algorithm_from_string(opt.algo);
    if (!algorithm) {
        std::cerr << "error: unknown algorithm '" << opt.algo << "'\n";
        return kExitFailure;
    }
    const Instance inst = load_instance(opt.file, opt.format);

    SolverParams params = opt.params;
    params.deterministic_ties = opt.deterministic;
    if (opt.hc_c_flag >= 0.0) params.hc_c = opt.hc_c_flag;

    Cover best;
    const BenchRecord rec = bench_instance(inst, *algorithm, params,
                                           opt.runs, opt.seed, &best);
    std::cout << rec.instance_name << ": " << rec.algorithm << " k=" << rec.k
              << " mean_k=" << rec.mean_k << " best_k=" << rec.best_k
              << " runs=" << rec.runs << " mean_time_ms=" << rec.mean_time_ns / 1e6
              << " seed=" << rec.seed << '\n';
    if (opt.print_sets) print_selected(std::cout, best.selected);
    if (!opt.out_path.empty()) {
        std::ofstream out(opt.out_path);
        print_selected(out, best.selected);
    }
    return kExitOk;
}

struct BenchOptions {
    std::string dir;
    std::vector<std::string> files;
    std::string algos = "greedy,biggreedy,tabu,wfc-hc";
    std::string format = "auto";
    SolverParams params;
    double hc_c_flag = -1.0;
    std::uint64_t seed = 0;
    int runs = 0;
    std::string out_csv;
    std::string out_md;
};

int run_bench(const BenchOptions& opt) {
    BenchConfig config;
    config.files = opt.files;
    if (!opt.dir.empty()) {
        std::vector<std::string> found;
        for (const auto& entry : fs::directory_iterator(opt.dir))
            if (entry.is_regular_file() && entry.path().extension() == ".txt")
                found.push_back(entry.path().string());
        std::sort(found.begin(), found.end());
        config.files.insert(config.files.end(), found.begin(), found.end());
    }
    if (config.files.empty()) {
        std::cerr << "error: no input files\n";
        return kExitFailure;
    }

    std::stringstream algos(opt.algos);
    std::string token;
    while (std::getline(algos, token, ',')) {
        const auto a = algorithm_from_string(token);
        if (!a) {
            std::cerr << "error: unknown algorithm '" << token << "'\n";
            return kExitFailure;
        }
        config.algorithms.push_back(*a);
    }

    config.params = opt.params;
    if (opt.hc_c_flag >= 0.0) config.params.hc_c = opt.hc_c_flag;
    config.runs = opt.runs;
    config.seed = opt.seed;
    config.format_hint = parse_hint(opt.format);

    const BenchOutcome outcome = run_benchmark(config);
    for (const auto& failure : outcome.failures)
        std::cerr << "error: " << failure.file << ": " << failure.error << '\n';

    if (outcome.records.empty()) return kExitFailure;
    std::cout << emit_table(outcome.records, TableFormat::markdown);
    if (!opt.out_csv.empty()) {
        std::ofstream out(opt.out_csv);
        out << emit_table(outcome.records, TableFormat::csv);
    }
    if (!opt.out_md.empty()) {
        std::ofstream out(opt.out_md);
        out << emit_table(outcome.records, TableFormat::markdown);
    }
    return outcome.failures.empty() ? kExitOk : kExitPartial;
}

int run_exact(const std::string& file, const std::string& format, std::size_t max_sets,
              std::uint64_t max_nodes) {
    const Instance inst = load_instance(file, format);
    OracleLimits limits;
    limits.max_sets = max_sets;
    limits.max_nodes = max_nodes;

    ExactResult result;
    try {
        result = exact_min_cover(inst, limits);
    } catch (const BuildError& e) {
        std::cerr << "refused: " << e.what() << '\n'
                  << "hint: the exact oracle is meant for small instances; raise --max-sets "
                     "to override\n";
        return kExitRefused;
    }
    if (!result.optimal()) {
        std::cout << "unknown: node budget (" << max_nodes << ") exhausted after "
                  << result.nodes_explored << " nodes\n";
        return kExitUnknown;
    }
    std::cout << inst.name() << ": optimal k=" << result.cover->size() << " ("
              << result.nodes_explored << " nodes)\n";
    print_selected(std::cout, result.cover->selected);
    return kExitOk;
}

int run_verify(const std::string& file, const std::string& solution_path,
               const std::string& format) {
    const Instance inst = load_instance(file, format);

    Cover cover{inst.name(), {}};
    std::istringstream tokens(read_file(solution_path));
    long id = 0;
    while (tokens >> id) cover.selected.push_back(static_cast<SetId>(id - 1));
    if (!tokens.eof()) {
        std::cerr << "error: solution file contains a non-integer token\n";
        return kExitFailure;
    }

    const VerifyReport report = verify_solution(inst, cover);
    std::cout << inst.name() << ": " << format_report(report);
    return report.feasible ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimum set cover heuristics: greedy / big greedy / tabu search and a "
                 "conflict-entropy collapse solver with hill-climbed scoring"};
    app.require_subcommand(1);

    SolveOptions solve_opt;
    BenchOptions bench_opt;
    std::string exact_file, exact_format = "auto";
    std::size_t exact_max_sets = 64;
    std::uint64_t exact_max_nodes = 10'000'000;
    std::string verify_file, verify_solution_path, verify_format = "auto";

    auto* solve = app.add_subcommand("solve", "Run one algorithm on an scp file");
    solve->add_option("file", solve_opt.file, "OR-Library scp file")->required();
    solve->add_option("--algo", solve_opt.algo,
                      "greedy|biggreedy|tabu|wfc|wfc-hc|wfc-hc-tabu (default wfc-hc)");
    solve->add_option("--bg-p", solve_opt.params.bg_p, "big greedy batch size");
    solve->add_option("--tabu-t", solve_opt.params.tabu_t, "tabu list capacity");
    solve->add_option("--tabu-n", solve_opt.params.tabu_n, "tabu iterations");
    solve->add_option("--hc-iters", solve_opt.params.hc_n, "hill climbing iterations");
    solve->add_option("--hc-exp0", solve_opt.params.hc_exp0, "initial entropy exponent");
    solve->add_option("--hc-temp", solve_opt.params.hc_temp, "initial temperature");
    solve->add_option("--hc-c", solve_opt.hc_c_flag,
                      "conflicts exponent (default 0.9, or 0.7 for scp6x files)");
    solve->add_option("--seed", solve_opt.seed, "master seed")->envname("WFC_SC_SEED");
    solve->add_option("--runs", solve_opt.runs,
                      "repetitions (default 25 for randomized algorithms, 1 otherwise)");
    solve->add_flag("--deterministic", solve_opt.deterministic,
                    "break solver ties by lowest set index");
    solve->add_option("--format", solve_opt.format, "auto|row|col");
    solve->add_flag("--print-sets", solve_opt.print_sets, "print the best cover (1-based)");
    solve->add_option("--out", solve_opt.out_path, "write the best cover to a solution file");

    auto* bench = app.add_subcommand("bench", "Benchmark algorithms over a directory of files");
    bench->add_option("--dir", bench_opt.dir, "directory of .txt scp files");
    bench->add_option("--files", bench_opt.files, "explicit file list");
    bench->add_option("--algos", bench_opt.algos, "comma-separated algorithm list");
    bench->add_option("--bg-p", bench_opt.params.bg_p, "big greedy batch size");
    bench->add_option("--tabu-t", bench_opt.params.tabu_t, "tabu list capacity");
    bench->add_option("--tabu-n", bench_opt.params.tabu_n, "tabu iterations");
    bench->add_option("--hc-iters", bench_opt.params.hc_n, "hill climbing iterations");
    bench->add_option("--hc-exp0", bench_opt.params.hc_exp0, "initial entropy exponent");
    bench->add_option("--hc-temp", bench_opt.params.hc_temp, "initial temperature");
    bench->add_option("--hc-c", bench_opt.hc_c_flag, "conflicts exponent override");
    bench->add_option("--seed", bench_opt.seed, "master seed")->envname("WFC_SC_SEED");
    bench->add_option("--runs", bench_opt.runs, "repetitions per (file, algorithm)");
    bench->add_option("--out", bench_opt.out_csv, "write records as CSV");
    bench->add_option("--md", bench_opt.out_md, "write the markdown table");
    bench->add_option("--format", bench_opt.format, "auto|row|col");

    auto* exact = app.add_subcommand("exact", "Prove the optimum of a small instance");
    exact->add_option("file", exact_file, "OR-Library scp file")->required();
    exact->add_option("--max-sets", exact_max_sets, "largest admissible set count");
    exact->add_option("--max-nodes", exact_max_nodes, "search node budget");
    exact->add_option("--format", exact_format, "auto|row|col");

    auto* verify = app.add_subcommand("verify", "Check a solution file against an instance");
    verify->add_option("file", verify_file, "OR-Library scp file")->required();
    verify->add_option("solution", verify_solution_path,
                       "whitespace-separated 1-based set indices")->required();
    verify->add_option("--format", verify_format, "auto|row|col");

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) return run_solve(solve_opt);
        if (bench->parsed()) return run_bench(bench_opt);
        if (exact->parsed())
            return run_exact(exact_file, exact_format, exact_max_sets, exact_max_nodes);
        if (verify->parsed())
            return run_verify(verify_file, verify_solution_path, verify_format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitFailure;
}
