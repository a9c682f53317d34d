#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "gmcp/bench.hpp"

using namespace gmcp;

namespace {

std::vector<BenchTask> small_tasks() {
    std::vector<BenchTask> tasks;
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        BenchTask t;
        t.label = "t" + std::to_string(seed);
        t.config.nodes = 60;
        t.config.paths = 5;
        t.config.cycles = 2;
        t.config.er_prob = 0.1;
        t.config.seed = seed;
        tasks.push_back(std::move(t));
    }
    return tasks;
}

}  // namespace

TEST_CASE("bench emits reps records per instance and algorithm") {
    BenchOptions opt;
    opt.reps = 3;
    const auto records = run_bench(small_tasks(), opt);
    REQUIRE(records.size() == 3 * 3 * 3);  // tasks x algs x reps
    for (const BenchRecord& r : records) {
        CHECK(r.values_agree);
        CHECK(r.n == 60);
        CHECK(r.m > 0);
        CHECK(r.wall_time_ms >= 0.0);
    }
}

TEST_CASE("record fields are reproducible run to run (timing aside)") {
    BenchOptions opt;
    opt.reps = 1;
    const auto a = run_bench(small_tasks(), opt);
    const auto b = run_bench(small_tasks(), opt);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].instance_label == b[i].instance_label);
        CHECK(a[i].alg == b[i].alg);
        CHECK(a[i].value == b[i].value);
        CHECK(a[i].iterations == b[i].iterations);
        CHECK(a[i].seed == b[i].seed);
    }
}

TEST_CASE("CSV schema is fixed") {
    BenchOptions opt;
    opt.reps = 1;
    const auto records = run_bench({small_tasks()[0]}, opt);
    std::ostringstream out;
    write_csv(out, records);
    const std::string text = out.str();
    CHECK(text.rfind("instance,n,m,seed,alg,value,iterations,time_ms\n", 0) == 0);
    CHECK(text.find("t1,60,") != std::string::npos);
    CHECK(text.find(",alg2-heap,") != std::string::npos);
}

TEST_CASE("summary aggregates one row per node-count class") {
    BenchOptions opt;
    opt.reps = 2;
    auto tasks = small_tasks();
    tasks[2].config.nodes = 90;
    tasks[2].label = "big";
    const auto records = run_bench(tasks, opt);
    const auto summary = summarize(records);
    REQUIRE(summary.size() == 2);
    CHECK(summary[0].n == 60);
    CHECK(summary[1].n == 90);
    for (const ClassSummary& s : summary) {
        CHECK(s.mean_ms_alg1 >= 0.0);
        CHECK(s.mean_ms_alg2_array >= 0.0);
        CHECK(s.mean_ms_alg2_heap >= 0.0);
    }
}

TEST_CASE("parallel instance evaluation returns the same records") {
    BenchOptions serial_opt;
    serial_opt.reps = 1;
    BenchOptions parallel_opt;
    parallel_opt.reps = 1;
    parallel_opt.parallel_instances = true;
    const auto a = run_bench(small_tasks(), serial_opt);
    const auto b = run_bench(small_tasks(), parallel_opt);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].instance_label == b[i].instance_label);
        CHECK(a[i].alg == b[i].alg);
        CHECK(a[i].value == b[i].value);
    }
}
