#pragma once

#include <vector>

#include "gmcp/graph.hpp"

namespace gmcp {

/// Label-setting state. dist[source] starts at +inf, every other node at 0;
/// once a node is extracted its label is final.
struct LabelState {
    std::vector<double> dist;            // indexed 1..n (slot 0 unused)
    std::vector<int> pred;               // arc id that set dist, 0 = none
    std::vector<char> visited;
    std::vector<NodeId> extraction_order;
};

struct Alg2Options {
    bool early_exit = false;  // stop once the sink is extracted
};

/// Label-setting solver, linear-scan extraction (O(n^2 + m)).
/// Requires all loss factors in (0, 1]; throws std::invalid_argument otherwise.
Solution solve_alg2_array(const Instance& inst, const Alg2Options& opt = {},
                          LabelState* out_labels = nullptr);

/// Same contract and tie-breaking as the array variant, binary max-heap with
/// lazy deletion (O((n + m) log n)). Returns bit-identical values and paths.
Solution solve_alg2_heap(const Instance& inst, const Alg2Options& opt = {},
                         LabelState* out_labels = nullptr);

/// Arc ids (i, j) violating d_j >= p_ij * min(u_ij, d_i) beyond tol.
/// An empty result certifies the labels optimal.
std::vector<int> check_optimality(const Instance& inst, const LabelState& labels,
                                  double tol = 1e-12);

/// Follows predecessor arcs from the sink back to the source. Throws
/// std::invalid_argument when the sink label is 0 (no path) and
/// std::runtime_error on a broken or cyclic predecessor chain.
Path reconstruct_path(const Instance& inst, const LabelState& labels, NodeId sink);

}  // namespace gmcp
