#include "gmcp/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>

#include "gmcp/instance_io.hpp"
#include "gmcp/solver_iterative.hpp"
#include "gmcp/solver_labeling.hpp"

namespace gmcp {

namespace {

constexpr const char* kAlgNames[3] = {"alg1", "alg2-array", "alg2-heap"};

Solution run_alg(int alg, const Instance& inst) {
    switch (alg) {
        case 0: return solve_alg1(inst);
        case 1: return solve_alg2_array(inst);
        default: return solve_alg2_heap(inst);
    }
}

bool values_close(const Solution& a, const Solution& b, double rel_tol) {
    if (a.status != b.status) {
        return false;
    }
    if (a.status == SolveStatus::NoPath) {
        return true;
    }
    const double scale = std::max({1.0, std::abs(a.value), std::abs(b.value)});
    return std::abs(a.value - b.value) <= rel_tol * scale;
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t k = v.size();
    return k % 2 ? v[k / 2] : 0.5 * (v[k / 2 - 1] + v[k / 2]);
}

}  // namespace

std::vector<BenchRecord> run_bench(const std::vector<BenchTask>& tasks, const BenchOptions& opt) {
    if (opt.reps < 1) {
        throw std::invalid_argument("bench: reps must be at least 1");
    }
    const std::int64_t task_count = static_cast<std::int64_t>(tasks.size());
    std::vector<std::vector<BenchRecord>> per_task(tasks.size());
    std::vector<std::string> mismatch(tasks.size());

#pragma omp parallel for schedule(dynamic) if (opt.parallel_instances)
    for (std::int64_t ti = 0; ti < task_count; ++ti) {
        const BenchTask& task = tasks[static_cast<std::size_t>(ti)];
        const Instance inst = generate(task.config);

        Solution last[3];
        std::vector<BenchRecord>& records = per_task[static_cast<std::size_t>(ti)];
        for (int alg = 0; alg < 3; ++alg) {
            for (int rep = 0; rep < opt.reps; ++rep) {
                const auto start = std::chrono::steady_clock::now();
                const Solution sol = run_alg(alg, inst);
                const auto stop = std::chrono::steady_clock::now();
                last[alg] = sol;
                BenchRecord rec;
                rec.instance_label = task.label;
                rec.n = inst.graph.node_count;
                rec.m = inst.graph.arc_count();
                rec.seed = task.config.seed;
                rec.alg = kAlgNames[alg];
                rec.value = sol.value;
                rec.iterations = sol.iterations;
                rec.wall_time_ms =
                    std::chrono::duration<double, std::milli>(stop - start).count();
                records.push_back(std::move(rec));
            }
        }

        const bool agree = values_close(last[0], last[1], opt.rel_tol) &&
                           values_close(last[1], last[2], opt.rel_tol);
        for (BenchRecord& rec : records) {
            rec.values_agree = agree;
        }
        if (!agree) {
            const std::string dump =
                opt.mismatch_dump_dir + "/" + task.label + "-mismatch.gmcp";
            std::ofstream out(dump);
            serialize_instance(inst, out);
            mismatch[static_cast<std::size_t>(ti)] =
                "solver values disagree on " + task.label + " (alg1=" +
                format_double(last[0].value) + ", alg2-array=" + format_double(last[1].value) +
                ", alg2-heap=" + format_double(last[2].value) + "); instance dumped to " + dump;
        }
    }

    for (const std::string& msg : mismatch) {
        if (!msg.empty()) {
            throw BenchMismatch(msg);
        }
    }
    std::vector<BenchRecord> flat;
    for (auto& records : per_task) {
        for (auto& rec : records) {
            flat.push_back(std::move(rec));
        }
    }
    return flat;
}

void write_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
    out << "instance,n,m,seed,alg,value,iterations,time_ms\n";
    for (const BenchRecord& r : records) {
        out << r.instance_label << ',' << r.n << ',' << r.m << ',' << r.seed << ',' << r.alg
            << ',' << format_double(r.value) << ',' << r.iterations << ','
            << format_double(r.wall_time_ms) << '\n';
    }
}

std::vector<ClassSummary> summarize(const std::vector<BenchRecord>& records) {
    // (instance, alg) -> rep times
    std::map<std::pair<std::string, std::string>, std::vector<double>> times;
    std::map<std::string, int> label_n;
    for (const BenchRecord& r : records) {
        times[{r.instance_label, r.alg}].push_back(r.wall_time_ms);
        label_n[r.instance_label] = r.n;
    }
    // node-count class -> per-alg medians
    std::map<int, std::map<std::string, std::vector<double>>> classes;
    for (const auto& [key, reps] : times) {
        classes[label_n[key.first]][key.second].push_back(median(reps));
    }
    std::vector<ClassSummary> out;
    for (const auto& [n, per_alg] : classes) {
        ClassSummary s;
        s.n = n;
        const auto mean = [&per_alg](const char* alg) {
            const auto it = per_alg.find(alg);
            if (it == per_alg.end() || it->second.empty()) {
                return 0.0;
            }
            double total = 0.0;
            for (double v : it->second) {
                total += v;
            }
            return total / static_cast<double>(it->second.size());
        };
        s.mean_ms_alg1 = mean("alg1");
        s.mean_ms_alg2_array = mean("alg2-array");
        s.mean_ms_alg2_heap = mean("alg2-heap");
        s.ratio_alg1_vs_alg2_array =
            s.mean_ms_alg2_array > 0.0 ? s.mean_ms_alg1 / s.mean_ms_alg2_array : 0.0;
        out.push_back(s);
    }
    return out;
}

void print_summary(std::ostream& out, const std::vector<ClassSummary>& summary) {
    out << "size-class mean times (ms), median over reps per instance\n";
    out << "      n       alg1 alg2-array  alg2-heap  alg1/alg2-array\n";
    char buf[160];
    for (const ClassSummary& s : summary) {
        std::snprintf(buf, sizeof(buf), "%7d %10.3f %10.3f %10.3f %16.2f\n", s.n, s.mean_ms_alg1,
                      s.mean_ms_alg2_array, s.mean_ms_alg2_heap, s.ratio_alg1_vs_alg2_array);
        out << buf;
    }
}

}  // namespace gmcp
