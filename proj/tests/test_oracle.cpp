#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "gmcp/instance_io.hpp"
#include "gmcp/netgen.hpp"
#include "gmcp/oracle.hpp"
#include "gmcp/path_eval.hpp"
#include "gmcp/solver_labeling.hpp"
#include "test_util.hpp"

using namespace gmcp;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

}  // namespace

TEST_CASE("brute force on the spec-level examples") {
    SUBCASE("single arc") {
        const Solution sol = brute_force(test::single_arc());
        CHECK(sol.status == SolveStatus::Optimal);
        CHECK(sol.value == 5.0);
        CHECK(sol.path == Path{1});
        CHECK(sol.iterations == 1);  // one path enumerated
    }
    SUBCASE("diamond") {
        const Solution sol = brute_force(test::diamond());
        CHECK(sol.value == 50.0);
        CHECK(sol.path == Path{3, 4});
        CHECK(sol.iterations == 2);
    }
    SUBCASE("disconnected sink") {
        const Instance inst = test::make_instance(3, 1, 3, {{1, 2, 5, 0.5}});
        const Solution sol = brute_force(inst);
        CHECK(sol.status == SolveStatus::NoPath);
        CHECK(sol.value == 0.0);
    }
}

TEST_CASE("enumeration refuses oversized instances") {
    GenConfig cfg;
    cfg.nodes = 20;
    cfg.paths = 2;
    cfg.seed = 3;
    const Instance inst = generate(cfg);
    CHECK_THROWS_AS(brute_force(inst), EnumerationLimitExceeded);
    OracleOptions opt;
    opt.node_cap = 20;
    CHECK_NOTHROW(brute_force(inst, opt));
}

TEST_CASE("ties pick the lexicographically smallest arc sequence") {
    // two parallel routes with identical value; arcs {1,4} vs {2,3} vs {2,5}...
    const Instance inst = test::make_instance(
        3, 1, 3,
        {{1, 2, 5, 1.0}, {1, 2, 5, 1.0}, {2, 3, 5, 1.0}, {2, 3, 5, 1.0}});
    const Solution sol = brute_force(inst);
    CHECK(sol.value == 5.0);
    CHECK(sol.path == Path{1, 3});
    CHECK(sol.iterations == 4);
}

TEST_CASE("parallel and serial enumerations are identical") {
    for (std::uint64_t seed = 1; seed <= 80; ++seed) {
        GenConfig cfg;
        cfg.nodes = 3 + static_cast<int>(seed % 8);
        cfg.paths = 2;
        cfg.cycles = 1;
        cfg.er_prob = 0.4;
        cfg.seed = seed;
        const Instance inst = generate(cfg);
        const Solution p = brute_force(inst);
        const Solution s = brute_force_serial(inst);
        REQUIRE(p.status == s.status);
        REQUIRE(p.value == s.value);
        REQUIRE(p.path == s.path);
        REQUIRE(p.iterations == s.iterations);
    }
}

TEST_CASE("LP export matches the golden file byte for byte") {
    const std::string lp = export_milp(test::single_arc());
    CHECK(lp == read_file(std::string(GMCP_GOLDEN_DIR) + "/single_arc.lp"));
    CHECK(lp == export_milp(test::single_arc()));  // deterministic re-export
}

TEST_CASE("LP export elides rows for isolated nodes") {
    const Instance inst = test::make_instance(3, 1, 3, {{1, 3, 2, 0.5}});  // node 2 isolated
    const std::string lp = export_milp(inst);
    CHECK(lp.find("bal_1:") != std::string::npos);
    CHECK(lp.find("bal_2:") == std::string::npos);
    CHECK(lp.find("bal_3:") != std::string::npos);
    CHECK(lp.find("deg_1: y_1 <= 1") != std::string::npos);
}

TEST_CASE("LP export without arcs still models the flow variables") {
    const Instance inst = parse_instance("p gmcp 2 0 1 2\n");
    const std::string lp = export_milp(inst);
    CHECK(lp.find("bal_1: -vs = 0") != std::string::npos);
    CHECK(lp.find("bal_2: vt = 0") != std::string::npos);
    CHECK(lp.find("Binaries") == std::string::npos);
}

TEST_CASE("feasibility certificate on the single arc is exact") {
    const Solution sol = brute_force(test::single_arc());
    const FeasibilityReport rep = check_feasible(test::single_arc(), sol);
    CHECK(rep.feasible);
    CHECK(rep.v_s == 10.0);  // x_1 = 10 saturates the arc
    CHECK(rep.v_t == 5.0);
    for (const ResidualRow& row : rep.rows) {
        if (row.equality) {
            CHECK(row.residual == 0.0);
        } else {
            CHECK(row.residual <= 0.0);
        }
    }
}

TEST_CASE("an inflated value shows up as a sink balance violation") {
    Solution sol = brute_force(test::single_arc());
    sol.value += 1.0;
    const FeasibilityReport rep = check_feasible(test::single_arc(), sol);
    CHECK_FALSE(rep.feasible);
    REQUIRE(rep.violations.size() == 1);
    CHECK(rep.violations[0] == "bal_2");
}

TEST_CASE("diamond optimum certifies with y on the wide route") {
    const Instance inst = test::diamond();
    const FeasibilityReport rep = check_feasible(inst, brute_force(inst));
    CHECK(rep.feasible);
    CHECK(rep.v_t == 50.0);
    CHECK(rep.v_s == 100.0);  // the source arc itself saturates
}

TEST_CASE("invalid solution paths are rejected") {
    Solution sol = brute_force(test::diamond());
    sol.path = {1, 4};  // broken chain
    CHECK_THROWS_AS(check_feasible(test::diamond(), sol), std::invalid_argument);
    Solution nopath;
    CHECK_THROWS_AS(check_feasible(test::diamond(), nopath), std::invalid_argument);
}

TEST_CASE("every simple st-path certifies at its own deliverable flow") {
    for (std::uint64_t seed = 100; seed < 140; ++seed) {
        GenConfig cfg;
        cfg.nodes = 3 + static_cast<int>(seed % 6);
        cfg.paths = 1;
        cfg.er_prob = 0.4;
        cfg.seed = seed;
        const Instance inst = generate(cfg);
        for_each_simple_st_path(inst, [&inst](const Path& p) {
            const double value = deliverable_flow(inst, p).delivered;
            if (value <= 0.0) {
                return;
            }
            Solution sol;
            sol.status = SolveStatus::Optimal;
            sol.value = value;
            sol.path = p;
            const FeasibilityReport rep = check_feasible(inst, sol);
            REQUIRE(rep.feasible);
        });
    }
}

TEST_CASE("oracle dominates both solvers on every small instance") {
    for (std::uint64_t seed = 200; seed < 240; ++seed) {
        GenConfig cfg;
        cfg.nodes = 3 + static_cast<int>(seed % 7);
        cfg.paths = 1;
        cfg.er_prob = 0.4;
        cfg.seed = seed;
        const Instance inst = generate(cfg);
        const Solution oracle = brute_force(inst);
        const Solution alg2 = solve_alg2_array(inst);
        REQUIRE(oracle.value >= alg2.value - 1e-12 * std::max(1.0, oracle.value));
        if (alg2.status == SolveStatus::Optimal) {
            REQUIRE(check_feasible(inst, alg2).feasible);
        }
    }
}
