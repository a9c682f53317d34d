#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gmcp/netgen.hpp"
#include "gmcp/oracle.hpp"
#include "gmcp/path_eval.hpp"
#include "test_util.hpp"

using namespace gmcp;

TEST_CASE("single arc delivers u * p") {
    const Instance inst = test::single_arc();
    const auto rep = deliverable_flow(inst, {1});
    CHECK(rep.delivered == 5.0);
    CHECK(rep.saturated_index == 1);
}

TEST_CASE("the later prefix bound wins") {
    // bounds: 10*0.5*1.0 = 5 and 4*1.0 = 4
    const Instance inst = test::make_instance(3, 1, 3, {{1, 2, 10, 0.5}, {2, 3, 4, 1.0}});
    const auto rep = deliverable_flow(inst, {1, 2});
    CHECK(rep.delivered == 4.0);
    CHECK(rep.saturated_index == 2);
}

TEST_CASE("all unit losses reduce to the bottleneck") {
    const Instance inst = test::make_instance(
        4, 1, 4, {{1, 2, 7, 1.0}, {2, 3, 3, 1.0}, {3, 4, 9, 1.0}});
    const auto rep = deliverable_flow(inst, {1, 2, 3});
    CHECK(rep.delivered == 3.0);
    CHECK(rep.saturated_index == 2);
    CHECK(path_bottleneck(inst, {1, 2, 3}) == 3.0);
}

TEST_CASE("ties resolve to the last saturated position") {
    const Instance inst = test::make_instance(3, 1, 3, {{1, 2, 5, 1.0}, {2, 3, 5, 1.0}});
    const auto rep = deliverable_flow(inst, {1, 2});
    CHECK(rep.delivered == 5.0);
    CHECK(rep.saturated_index == 2);
}

TEST_CASE("invalid paths are rejected") {
    const Instance inst = test::diamond();
    CHECK_THROWS_AS(deliverable_flow(inst, {1, 4}), std::invalid_argument);
    CHECK_THROWS_AS(deliverable_flow(inst, {}), std::invalid_argument);
    CHECK_THROWS_AS(path_bottleneck(inst, {99}), std::invalid_argument);
}

TEST_CASE("normalization examples") {
    SUBCASE("p <= 1 unchanged") {
        Graph g = test::single_arc().graph;
        const Graph out = normalize_capacities(g);
        CHECK(out.arc(1).capacity == 10.0);
        CHECK(out.arc(1).loss == 0.5);
    }
    SUBCASE("p above 1 halves the capacity") {
        Graph g = test::make_instance(2, 1, 2, {{1, 2, 10, 2.0}}).graph;
        const Graph out = normalize_capacities(g);
        CHECK(out.arc(1).capacity == 5.0);
        CHECK(out.arc(1).loss == 2.0);  // loss factors stay put
    }
    SUBCASE("zero capacity preserved") {
        Graph g = test::make_instance(2, 1, 2, {{1, 2, 0, 0.5}}).graph;
        CHECK(normalize_capacities(g).arc(1).capacity == 0.0);
    }
    SUBCASE("no-op twice when every p <= 1") {
        GenConfig cfg;
        cfg.nodes = 8;
        cfg.paths = 2;
        cfg.er_prob = 0.4;
        cfg.seed = 9;
        const Instance inst = generate(cfg);
        const Graph once = normalize_capacities(inst.graph);
        const Graph twice = normalize_capacities(once);
        for (int id = 1; id <= inst.graph.arc_count(); ++id) {
            REQUIRE(once.arc(id).capacity == inst.graph.arc(id).capacity);
            REQUIRE(twice.arc(id).capacity == once.arc(id).capacity);
        }
    }
}

TEST_CASE("reliability is the loss product") {
    const Instance inst = test::make_instance(3, 1, 3, {{1, 2, 9, 0.5}, {2, 3, 9, 0.5}});
    CHECK(path_reliability(inst, {1, 2}) == 0.25);
    const Instance unit = test::chain();
    CHECK(path_reliability(unit, {1, 2}) == 1.0);
}

namespace {

// every generated instance below is small enough to enumerate
std::vector<Path> sample_paths(const Instance& inst) {
    std::vector<Path> paths;
    for_each_simple_st_path(inst, [&paths](const Path& p) { paths.push_back(p); });
    return paths;
}

}  // namespace

TEST_CASE("min property holds at every position on random paths") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        GenConfig cfg;
        cfg.nodes = 3 + static_cast<int>(seed % 6);
        cfg.paths = 2;
        cfg.er_prob = 0.4;
        cfg.seed = seed;
        const Instance inst = generate(cfg);
        for (const Path& p : sample_paths(inst)) {
            const auto rep = deliverable_flow(inst, p);
            // recompute each bound with the same right-to-left products
            const std::size_t k = p.size();
            std::vector<double> suffix(k);
            double acc = 1.0;
            for (std::size_t j = k; j-- > 0;) {
                acc = inst.graph.arc(p[j]).loss * acc;
                suffix[j] = acc;
            }
            int last_min = 0;
            for (std::size_t j = 0; j < k; ++j) {
                const double bound = inst.graph.arc(p[j]).capacity * suffix[j];
                REQUIRE(rep.delivered <= bound);
                if (bound <= rep.delivered) {
                    last_min = static_cast<int>(j) + 1;
                }
            }
            REQUIRE(rep.saturated_index == last_min);
            const double at_sat =
                inst.graph.arc(p[static_cast<std::size_t>(rep.saturated_index) - 1]).capacity *
                suffix[static_cast<std::size_t>(rep.saturated_index) - 1];
            REQUIRE(rep.delivered == at_sat);  // exact equality at the saturated position
        }
    }
}

TEST_CASE("power-of-two capacity scaling is exact") {
    for (std::uint64_t seed = 50; seed < 60; ++seed) {
        GenConfig cfg;
        cfg.nodes = 6;
        cfg.paths = 2;
        cfg.er_prob = 0.5;
        cfg.seed = seed;
        Instance inst = generate(cfg);
        const auto paths = sample_paths(inst);
        std::vector<SaturationReport> before;
        before.reserve(paths.size());
        for (const Path& p : paths) {
            before.push_back(deliverable_flow(inst, p));
        }
        for (Arc& a : inst.graph.arcs) {
            a.capacity *= 4.0;
        }
        for (std::size_t i = 0; i < paths.size(); ++i) {
            const auto rep = deliverable_flow(inst, paths[i]);
            REQUIRE(rep.delivered == 4.0 * before[i].delivered);
            REQUIRE(rep.saturated_index == before[i].saturated_index);
        }
    }
}

TEST_CASE("raising a non-saturated capacity changes nothing") {
    std::mt19937_64 pick(7);
    for (std::uint64_t seed = 80; seed < 92; ++seed) {
        GenConfig cfg;
        cfg.nodes = 6;
        cfg.paths = 2;
        cfg.er_prob = 0.4;
        cfg.seed = seed;
        Instance inst = generate(cfg);
        for (const Path& p : sample_paths(inst)) {
            const auto rep = deliverable_flow(inst, p);
            if (p.size() < 2) {
                continue;
            }
            const std::size_t j = pick() % p.size();
            if (static_cast<int>(j) + 1 == rep.saturated_index) {
                continue;
            }
            const int id = p[j];
            const double saved = inst.graph.arcs[static_cast<std::size_t>(id - 1)].capacity;
            inst.graph.arcs[static_cast<std::size_t>(id - 1)].capacity = saved * 2.0;
            const auto bumped = deliverable_flow(inst, p);
            REQUIRE(bumped.delivered == rep.delivered);
            REQUIRE(bumped.saturated_index == rep.saturated_index);
            inst.graph.arcs[static_cast<std::size_t>(id - 1)].capacity = saved;
        }
    }
}

TEST_CASE("unit losses make delivered equal the bottleneck") {
    for (std::uint64_t seed = 100; seed < 112; ++seed) {
        GenConfig cfg;
        cfg.nodes = 6;
        cfg.paths = 2;
        cfg.er_prob = 0.4;
        cfg.seed = seed;
        cfg.loss_range = {1.0, 1.0};
        const Instance inst = generate(cfg);
        for (const Path& p : sample_paths(inst)) {
            REQUIRE(deliverable_flow(inst, p).delivered == path_bottleneck(inst, p));
        }
    }
}
