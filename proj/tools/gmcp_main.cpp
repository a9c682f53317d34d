// gmcp command line: generate, solve, verify, export and benchmark
// generalized maximum capacity path instances.
//
// Exit codes: 0 success, 1 no path, 2 usage or input error,
// 3 guard/limit hit, 4 internal disagreement.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gmcp/bench.hpp"
#include "gmcp/instance_io.hpp"
#include "gmcp/netgen.hpp"
#include "gmcp/oracle.hpp"
#include "gmcp/path_eval.hpp"
#include "gmcp/solver_iterative.hpp"
#include "gmcp/solver_labeling.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNoPath = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;
constexpr int kExitDisagree = 4;

struct GuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

gmcp::Instance load_instance(const std::string& file) {
    std::ifstream in(file);
    if (!in) {
        throw std::runtime_error(file + ": cannot open");
    }
    try {
        return gmcp::parse_instance(in);
    } catch (const gmcp::ParseError& e) {
        throw std::runtime_error(file + ": " + e.what());
    }
}

// Loads, validates, and applies capacity normalization when needed. Loss
// factors above 1 stay above 1 after normalization; label-setting solvers
// do not support them, so callers that solve pass require_unit_losses.
gmcp::Instance load_for_solving(const std::string& file, bool require_unit_losses) {
    gmcp::Instance inst = load_instance(file);
    bool lossy = false;
    for (const auto& v : gmcp::validate(inst)) {
        if (!v.warning) {
            throw std::runtime_error(file + ": invalid instance: " + v.message);
        }
        lossy = true;
    }
    if (lossy) {
        std::cout << "note: loss factors above 1; applying capacity normalization"
                     " (u := min(u, u/p))\n";
        inst = gmcp::normalize_capacities(std::move(inst));
        if (require_unit_losses) {
            throw GuardError("loss factors above 1 are outside solver support");
        }
    }
    return inst;
}

std::string join_nodes(const gmcp::Instance& inst, const gmcp::Path& path) {
    std::string out;
    for (gmcp::NodeId v : gmcp::path_nodes(inst.graph, path)) {
        if (!out.empty()) {
            out += ' ';
        }
        out += std::to_string(v);
    }
    return out;
}

int cmd_gen(const gmcp::GenConfig& cfg, const std::string& out_file) {
    std::ofstream out(out_file);
    if (!out) {
        throw std::runtime_error(out_file + ": cannot open for writing");
    }
    const std::int64_t m = gmcp::stream_generate(cfg, out);
    if (!out.good()) {
        throw std::runtime_error(out_file + ": write failed");
    }
    std::cout << "n " << cfg.nodes << "\nm " << m << "\nseed " << cfg.seed << "\n";
    return kExitOk;
}

int cmd_solve(const std::string& input, const std::string& alg, bool check, bool early_exit) {
    const gmcp::Instance inst = load_for_solving(input, true);

    gmcp::LabelState labels;
    gmcp::Solution sol;
    const gmcp::Alg2Options opt{early_exit};
    const auto start = std::chrono::steady_clock::now();
    if (alg == "alg1") {
        sol = gmcp::solve_alg1(inst);
    } else if (alg == "alg2-array") {
        sol = gmcp::solve_alg2_array(inst, opt, &labels);
    } else {
        sol = gmcp::solve_alg2_heap(inst, opt, &labels);
    }
    const auto stop = std::chrono::steady_clock::now();

    if (sol.status == gmcp::SolveStatus::NoPath) {
        std::cout << "no path\n";
        return kExitNoPath;
    }
    std::cout << "value " << gmcp::format_double(sol.value) << "\n";
    std::cout << "path " << join_nodes(inst, sol.path) << "\n";
    std::cout << "iterations " << sol.iterations << "\n";
    std::cout << "time_ms "
              << gmcp::format_double(
                     std::chrono::duration<double, std::milli>(stop - start).count())
              << "\n";

    if (check) {
        if (alg != "alg1" && !early_exit) {
            const auto violated = gmcp::check_optimality(inst, labels);
            std::cout << "optimality conditions: " << violated.size() << " violations\n";
            if (!violated.empty()) {
                return kExitDisagree;
            }
        }
        if (inst.graph.node_count <= gmcp::OracleOptions{}.node_cap) {
            const gmcp::Solution oracle = gmcp::brute_force(inst);
            const double scale = std::max({1.0, oracle.value, sol.value});
            if (oracle.status != sol.status ||
                std::abs(oracle.value - sol.value) > 1e-9 * scale) {
                std::cout << "oracle " << gmcp::format_double(oracle.value) << ": DISAGREE\n";
                return kExitDisagree;
            }
            std::cout << "oracle " << gmcp::format_double(oracle.value) << ": AGREE\n";
        } else {
            std::cout << "oracle check skipped (instance above enumeration cap)\n";
        }
    }
    return kExitOk;
}

int cmd_oracle(const std::string& input, int cap) {
    const gmcp::Instance inst = load_for_solving(input, true);
    gmcp::OracleOptions opt;
    opt.node_cap = cap;
    gmcp::Solution oracle;
    try {
        oracle = gmcp::brute_force(inst, opt);
    } catch (const gmcp::EnumerationLimitExceeded& e) {
        throw GuardError(e.what());
    }
    const gmcp::Solution s1 = gmcp::solve_alg1(inst);
    const gmcp::Solution s2 = gmcp::solve_alg2_array(inst);

    const auto agree = [&oracle](const gmcp::Solution& s) {
        if (s.status != oracle.status) {
            return false;
        }
        const double scale = std::max({1.0, oracle.value, s.value});
        return std::abs(s.value - oracle.value) <= 1e-9 * scale;
    };
    const bool ok = agree(s1) && agree(s2);
    std::cout << "oracle " << gmcp::format_double(oracle.value) << ", alg1 "
              << gmcp::format_double(s1.value) << ", alg2 " << gmcp::format_double(s2.value)
              << ": " << (ok ? "AGREE" : "DISAGREE") << "\n";
    if (!ok) {
        return kExitDisagree;
    }
    return oracle.status == gmcp::SolveStatus::NoPath ? kExitNoPath : kExitOk;
}

int cmd_export_lp(const std::string& input, const std::string& out_file) {
    gmcp::Instance inst = load_instance(input);
    bool lossy = false;
    for (const auto& v : gmcp::validate(inst)) {
        if (!v.warning) {
            throw std::runtime_error(input + ": invalid instance: " + v.message);
        }
        lossy = true;
    }
    if (lossy) {
        std::cout << "note: loss factors above 1; applying capacity normalization"
                     " (u := min(u, u/p))\n";
        inst = gmcp::normalize_capacities(std::move(inst));
    }
    std::ofstream out(out_file);
    if (!out) {
        throw std::runtime_error(out_file + ": cannot open for writing");
    }
    out << gmcp::export_milp(inst);
    if (!out.good()) {
        throw std::runtime_error(out_file + ": write failed");
    }
    return kExitOk;
}

std::vector<int> parse_preset_list(const std::string& spec) {
    // "2" | "1..5" | "1,3,7"
    std::vector<int> out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto dots = item.find("..");
        if (dots == std::string::npos) {
            out.push_back(std::stoi(item));
        } else {
            const int lo = std::stoi(item.substr(0, dots));
            const int hi = std::stoi(item.substr(dots + 2));
            for (int k = lo; k <= hi; ++k) {
                out.push_back(k);
            }
        }
    }
    return out;
}

std::vector<gmcp::BenchTask> load_config_file(const std::string& file) {
    std::ifstream in(file);
    if (!in) {
        throw std::runtime_error(file + ": cannot open");
    }
    // one task per line: label nodes paths cycles er_prob seed
    std::vector<gmcp::BenchTask> tasks;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') {
            continue;
        }
        std::istringstream fields(line);
        gmcp::BenchTask task;
        if (!(fields >> task.label >> task.config.nodes >> task.config.paths >>
              task.config.cycles >> task.config.er_prob >> task.config.seed)) {
            throw std::runtime_error(file + ":" + std::to_string(lineno) +
                                     ": expected 'label nodes paths cycles er_prob seed'");
        }
        tasks.push_back(std::move(task));
    }
    return tasks;
}

int cmd_bench(const std::string& presets, const std::string& configs, int reps,
              const std::string& out_file, bool full_density, bool parallel) {
    std::vector<gmcp::BenchTask> tasks;
    if (!presets.empty()) {
        const auto all = gmcp::table1_presets();
        for (int k : parse_preset_list(presets)) {
            if (k < 1 || k > static_cast<int>(all.size())) {
                throw CLI::ValidationError("--presets", "preset index out of range");
            }
            gmcp::BenchTask task;
            task.label = all[static_cast<std::size_t>(k) - 1].label;
            task.config = all[static_cast<std::size_t>(k) - 1].config;
            if (!full_density && task.config.er_prob > 0.05) {
                task.config.er_prob = 0.05;  // desk-scale density; --full-density restores
                task.label += "-scaled";
            }
            tasks.push_back(std::move(task));
        }
    } else {
        tasks = load_config_file(configs);
    }
    if (tasks.empty()) {
        throw CLI::ValidationError("--configs", "no benchmark instances given");
    }

    gmcp::BenchOptions opt;
    opt.reps = reps;
    opt.parallel_instances = parallel;
    std::vector<gmcp::BenchRecord> records;
    try {
        records = gmcp::run_bench(tasks, opt);
    } catch (const gmcp::BenchMismatch& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDisagree;
    }

    std::ofstream out(out_file);
    if (!out) {
        throw std::runtime_error(out_file + ": cannot open for writing");
    }
    gmcp::write_csv(out, records);
    gmcp::print_summary(std::cout, gmcp::summarize(records));
    std::cout << "wrote " << records.size() << " records to " << out_file << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized maximum capacity path toolkit"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate a random instance file");
    gmcp::GenConfig cfg;
    int preset_no = 0;
    std::string gen_out;
    bool seed_given = false;
    gen->add_option("--nodes", cfg.nodes, "node count (source is 1, sink is the last node)");
    gen->add_option("--paths", cfg.paths, "number of guaranteed source-to-sink paths");
    gen->add_option("--cycles", cfg.cycles, "number of injected cycles");
    gen->add_option("--er-prob", cfg.er_prob, "background arc probability in [0,1]");
    auto* seed_opt = gen->add_option("--seed", cfg.seed, "RNG seed");
    gen->add_option("--preset", preset_no, "use benchmark preset 1..15 (overrides the counts)");
    gen->add_option("--out", gen_out, "output file")->required();

    // solve
    auto* solve = app.add_subcommand("solve", "solve an instance file");
    std::string solve_in, solve_alg = "alg2-array";
    bool solve_check = false, solve_early = false;
    solve->add_option("--input", solve_in, "instance file")->required();
    solve->add_option("--alg", solve_alg, "algorithm")
        ->check(CLI::IsMember({"alg1", "alg2-array", "alg2-heap"}));
    solve->add_flag("--check", solve_check, "verify optimality conditions / oracle agreement");
    solve->add_flag("--early-exit", solve_early, "stop label setting once the sink is final");

    // oracle
    auto* oracle = app.add_subcommand("oracle", "brute-force comparison on a small instance");
    std::string oracle_in;
    int oracle_cap = gmcp::OracleOptions{}.node_cap;
    oracle->add_option("--input", oracle_in, "instance file")->required();
    oracle->add_option("--cap", oracle_cap, "node cap for enumeration");

    // export-lp
    auto* lp = app.add_subcommand("export-lp", "write the mixed binary model in LP format");
    std::string lp_in, lp_out;
    lp->add_option("--input", lp_in, "instance file")->required();
    lp->add_option("--out", lp_out, "output .lp file")->required();

    // bench
    auto* bench = app.add_subcommand("bench", "timing comparison, CSV output");
    std::string bench_presets, bench_configs, bench_out;
    int bench_reps = 3;
    bool bench_full = false, bench_parallel = false;
    bench->add_option("--presets", bench_presets, "preset rows, e.g. 1..3 or 1,4");
    bench->add_option("--configs", bench_configs,
                      "config file: 'label nodes paths cycles er_prob seed' per line");
    bench->add_option("--reps", bench_reps, "repetitions per instance and algorithm");
    bench->add_option("--out", bench_out, "output CSV file")->required();
    bench->add_flag("--full-density", bench_full, "keep full preset densities");
    bench->add_flag("--parallel", bench_parallel,
                    "run instances concurrently (timings become indicative)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (gen->parsed()) {
            if (preset_no != 0) {
                const auto all = gmcp::table1_presets();
                if (preset_no < 1 || preset_no > static_cast<int>(all.size())) {
                    std::cerr << "error: preset index out of range\n";
                    return kExitUsage;
                }
                const std::uint64_t seed = cfg.seed;
                cfg = all[static_cast<std::size_t>(preset_no) - 1].config;
                if (seed_opt->count() > 0) {
                    cfg.seed = seed;
                }
            }
            (void)seed_given;
            return cmd_gen(cfg, gen_out);
        }
        if (solve->parsed()) {
            return cmd_solve(solve_in, solve_alg, solve_check, solve_early);
        }
        if (oracle->parsed()) {
            return cmd_oracle(oracle_in, oracle_cap);
        }
        if (lp->parsed()) {
            return cmd_export_lp(lp_in, lp_out);
        }
        if (bench->parsed()) {
            return cmd_bench(bench_presets, bench_configs, bench_reps, bench_out, bench_full,
                             bench_parallel);
        }
    } catch (const GuardError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitGuard;
    } catch (const gmcp::EnumerationLimitExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitGuard;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
