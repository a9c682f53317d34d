#include "gmcp/graph.hpp"

#include <stdexcept>
#include <string>

namespace gmcp {

Graph build_graph(int node_count, std::vector<Arc> arcs) {
    if (node_count < 1) {
        throw std::invalid_argument("node count must be positive");
    }
    Graph g;
    g.node_count = node_count;
    g.arcs = std::move(arcs);
    g.out_arcs.assign(static_cast<std::size_t>(node_count) + 1, {});
    for (std::size_t i = 0; i < g.arcs.size(); ++i) {
        Arc& a = g.arcs[i];
        a.id = static_cast<int>(i) + 1;
        const std::string where = "arc " + std::to_string(a.id) + ": ";
        if (a.tail < 1 || a.tail > node_count) {
            throw std::invalid_argument(where + "tail out of range");
        }
        if (a.head < 1 || a.head > node_count) {
            throw std::invalid_argument(where + "head out of range");
        }
        if (a.tail == a.head) {
            throw std::invalid_argument(where + "self-loop");
        }
        g.out_arcs[static_cast<std::size_t>(a.tail)].push_back(a.id);
    }
    return g;
}

bool is_valid_path(const Instance& inst, const Path& path) {
    const Graph& g = inst.graph;
    if (path.empty()) {
        return false;
    }
    std::vector<char> seen(static_cast<std::size_t>(g.node_count) + 1, 0);
    NodeId at = 0;
    for (std::size_t i = 0; i < path.size(); ++i) {
        const int id = path[i];
        if (id < 1 || id > g.arc_count()) {
            return false;
        }
        const Arc& a = g.arc(id);
        if (i == 0) {
            at = a.tail;
            seen[static_cast<std::size_t>(at)] = 1;
        } else if (a.tail != at) {
            return false;
        }
        if (seen[static_cast<std::size_t>(a.head)]) {
            return false;  // repeated node
        }
        seen[static_cast<std::size_t>(a.head)] = 1;
        at = a.head;
    }
    return true;
}

bool is_valid_st_path(const Instance& inst, const Path& path) {
    if (!is_valid_path(inst, path)) {
        return false;
    }
    return inst.graph.arc(path.front()).tail == inst.source &&
           inst.graph.arc(path.back()).head == inst.sink;
}

std::vector<NodeId> path_nodes(const Graph& g, const Path& path) {
    std::vector<NodeId> nodes;
    if (path.empty()) {
        return nodes;
    }
    nodes.reserve(path.size() + 1);
    nodes.push_back(g.arc(path.front()).tail);
    for (int id : path) {
        nodes.push_back(g.arc(id).head);
    }
    return nodes;
}

}  // namespace gmcp
