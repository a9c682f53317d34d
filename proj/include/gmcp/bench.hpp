#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "gmcp/netgen.hpp"

namespace gmcp {

struct BenchTask {
    std::string label;
    GenConfig config;
};

struct BenchOptions {
    int reps = 3;
    bool parallel_instances = false;  // default off: timing fidelity
    double rel_tol = 1e-9;            // cross-algorithm value agreement
    std::string mismatch_dump_dir = ".";
};

struct BenchRecord {
    std::string instance_label;
    int n = 0;
    std::int64_t m = 0;
    std::uint64_t seed = 0;
    std::string alg;  // alg1 | alg2-array | alg2-heap
    double value = 0.0;
    int iterations = 0;
    double wall_time_ms = 0.0;
    bool values_agree = false;
};

/// Raised when solver values disagree on an instance; the instance is
/// serialized next to the results for triage before throwing.
struct BenchMismatch : std::runtime_error {
    explicit BenchMismatch(const std::string& message) : std::runtime_error(message) {}
};

/// Generates each task's instance, solves it reps times with every
/// algorithm (wall clock around the solve call only), and enforces
/// cross-algorithm value agreement per instance.
std::vector<BenchRecord> run_bench(const std::vector<BenchTask>& tasks,
                                   const BenchOptions& opt = {});

/// Fixed schema: instance,n,m,seed,alg,value,iterations,time_ms
void write_csv(std::ostream& out, const std::vector<BenchRecord>& records);

struct ClassSummary {
    int n = 0;
    double mean_ms_alg1 = 0.0;
    double mean_ms_alg2_array = 0.0;
    double mean_ms_alg2_heap = 0.0;
    double ratio_alg1_vs_alg2_array = 0.0;
};

/// Median over reps per (instance, algorithm), then mean per node-count
/// class.
std::vector<ClassSummary> summarize(const std::vector<BenchRecord>& records);

void print_summary(std::ostream& out, const std::vector<ClassSummary>& summary);

}  // namespace gmcp
