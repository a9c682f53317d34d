#pragma once

#include <vector>

namespace gmcp {

/// 1-based node index, matching the on-disk instance format.
using NodeId = int;

/// Ordered list of arc ids forming a directed walk.
using Path = std::vector<int>;

struct Arc {
    int id = 0;  // 1-based, stable, assigned in construction order
    NodeId tail = 0;
    NodeId head = 0;
    double capacity = 0.0;  // flow units, >= 0
    double loss = 1.0;      // multiplicative factor applied to flow crossing the arc, > 0
    bool artificial = false;
};

/// Directed multigraph. Parallel arcs are allowed and distinguished by id.
struct Graph {
    int node_count = 0;
    std::vector<Arc> arcs;                   // arcs[i].id == i + 1
    std::vector<std::vector<int>> out_arcs;  // indexed 1..node_count, arc ids in id order

    int arc_count() const { return static_cast<int>(arcs.size()); }
    const Arc& arc(int id) const { return arcs[static_cast<std::size_t>(id) - 1]; }
};

/// Assigns arc ids 1..m in input order and builds the adjacency lists.
/// Throws std::invalid_argument on out-of-range endpoints, self-loops,
/// or a non-positive node count.
Graph build_graph(int node_count, std::vector<Arc> arcs);

struct Instance {
    Graph graph;
    NodeId source = 0;
    NodeId sink = 0;
};

enum class SolveStatus { Optimal, NoPath };

struct Solution {
    SolveStatus status = SolveStatus::NoPath;
    double value = 0.0;  // flow delivered at the sink
    Path path;           // original arc ids, simple; empty when NoPath
    int iterations = 0;  // solver-specific work counter
};

/// True when the path is nonempty, every id exists, consecutive arcs chain
/// head-to-tail, and no node repeats.
bool is_valid_path(const Instance& inst, const Path& path);

/// is_valid_path plus: starts at the source, ends at the sink.
bool is_valid_st_path(const Instance& inst, const Path& path);

/// Node sequence visited by the path: tail of the first arc, then each head.
std::vector<NodeId> path_nodes(const Graph& g, const Path& path);

}  // namespace gmcp
