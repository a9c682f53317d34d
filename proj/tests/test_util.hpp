#pragma once

#include <tuple>
#include <vector>

#include "gmcp/graph.hpp"

namespace gmcp::test {

// (tail, head, capacity, loss)
using ArcSpec = std::tuple<int, int, double, double>;

inline Instance make_instance(int n, int source, int sink, const std::vector<ArcSpec>& specs) {
    std::vector<Arc> arcs;
    arcs.reserve(specs.size());
    for (const auto& [tail, head, cap, loss] : specs) {
        arcs.push_back(Arc{0, tail, head, cap, loss, false});
    }
    Instance inst;
    inst.graph = build_graph(n, std::move(arcs));
    inst.source = source;
    inst.sink = sink;
    return inst;
}

// diamond used across the solver tests: two routes, lower one wins with 50
//   1 -> 2 (u=10,  p=0.9), 2 -> 4 (u=100, p=0.9)
//   1 -> 3 (u=100, p=0.5), 3 -> 4 (u=100, p=1.0)
inline Instance diamond() {
    return make_instance(4, 1, 4,
                         {{1, 2, 10.0, 0.9},
                          {2, 4, 100.0, 0.9},
                          {1, 3, 100.0, 0.5},
                          {3, 4, 100.0, 1.0}});
}

// two-arc chain whose bottleneck sits at the sink side:
//   1 -> 2 (u=100, p=1), 2 -> 3 (u=1, p=1)
inline Instance chain() {
    return make_instance(3, 1, 3, {{1, 2, 100.0, 1.0}, {2, 3, 1.0, 1.0}});
}

inline Instance single_arc() {
    return make_instance(2, 1, 2, {{1, 2, 10.0, 0.5}});
}

}  // namespace gmcp::test
