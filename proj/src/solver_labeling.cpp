#include "gmcp/solver_labeling.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>

#include "gmcp/path_eval.hpp"

namespace gmcp {

namespace {

void require_solvable(const Instance& inst) {
    const Graph& g = inst.graph;
    if (inst.source < 1 || inst.source > g.node_count || inst.sink < 1 ||
        inst.sink > g.node_count || inst.source == inst.sink) {
        throw std::invalid_argument("instance has invalid source/sink");
    }
    for (const Arc& a : g.arcs) {
        if (!std::isfinite(a.capacity) || a.capacity < 0) {
            throw std::invalid_argument("capacities must be finite and nonnegative");
        }
        if (!(a.loss > 0) || a.loss > 1.0) {
            throw std::invalid_argument("loss factors must lie in (0, 1] for label-setting solvers");
        }
    }
}

LabelState init_labels(const Instance& inst) {
    const std::size_t size = static_cast<std::size_t>(inst.graph.node_count) + 1;
    LabelState st;
    st.dist.assign(size, 0.0);
    st.pred.assign(size, 0);
    st.visited.assign(size, 0);
    st.dist[static_cast<std::size_t>(inst.source)] = kUnboundedFlow;
    return st;
}

Solution finish(const Instance& inst, LabelState& st, int extracted, LabelState* out_labels) {
    Solution sol;
    sol.iterations = extracted;
    if (st.dist[static_cast<std::size_t>(inst.sink)] > 0.0) {
        sol.path = reconstruct_path(inst, st, inst.sink);
        sol.value = deliverable_flow(inst, sol.path).delivered;
        sol.status = SolveStatus::Optimal;
    }
    if (out_labels) {
        *out_labels = std::move(st);
    }
    return sol;
}

// Relaxation shared by both variants: d_j < p * min(u, d_i) with strict
// comparison, so the first arc to reach a value keeps the predecessor slot.
template <class OnImprove>
void relax_out_arcs(const Instance& inst, LabelState& st, NodeId i, OnImprove&& on_improve) {
    const double di = st.dist[static_cast<std::size_t>(i)];
    for (int id : inst.graph.out_arcs[static_cast<std::size_t>(i)]) {
        const Arc& a = inst.graph.arc(id);
        if (st.visited[static_cast<std::size_t>(a.head)]) {
            continue;
        }
        const double cand = a.loss * std::min(a.capacity, di);
        double& dj = st.dist[static_cast<std::size_t>(a.head)];
        if (dj < cand) {
            dj = cand;
            st.pred[static_cast<std::size_t>(a.head)] = id;
            on_improve(a.head, cand);
        }
    }
}

}  // namespace

Solution solve_alg2_array(const Instance& inst, const Alg2Options& opt, LabelState* out_labels) {
    require_solvable(inst);
    const int n = inst.graph.node_count;
    LabelState st = init_labels(inst);
    int extracted = 0;
    for (;;) {
        NodeId best = 0;
        double best_d = 0.0;
        for (NodeId v = 1; v <= n; ++v) {
            if (!st.visited[static_cast<std::size_t>(v)] &&
                st.dist[static_cast<std::size_t>(v)] > best_d) {
                best_d = st.dist[static_cast<std::size_t>(v)];
                best = v;
            }
        }
        if (best == 0) {
            break;  // every remaining label is 0: unreachable region
        }
        st.visited[static_cast<std::size_t>(best)] = 1;
        st.extraction_order.push_back(best);
        ++extracted;
        if (opt.early_exit && best == inst.sink) {
            break;
        }
        relax_out_arcs(inst, st, best, [](NodeId, double) {});
    }
    return finish(inst, st, extracted, out_labels);
}

Solution solve_alg2_heap(const Instance& inst, const Alg2Options& opt, LabelState* out_labels) {
    require_solvable(inst);
    LabelState st = init_labels(inst);

    struct Entry {
        double d;
        NodeId v;
    };
    // top = largest label, lowest node id on ties (same order the array scan picks)
    struct Less {
        bool operator()(const Entry& a, const Entry& b) const {
            if (a.d != b.d) return a.d < b.d;
            return a.v > b.v;
        }
    };
    std::priority_queue<Entry, std::vector<Entry>, Less> heap;
    heap.push(Entry{kUnboundedFlow, inst.source});

    int extracted = 0;
    while (!heap.empty()) {
        const Entry top = heap.top();
        heap.pop();
        if (st.visited[static_cast<std::size_t>(top.v)]) {
            continue;  // stale duplicate
        }
        st.visited[static_cast<std::size_t>(top.v)] = 1;
        st.extraction_order.push_back(top.v);
        ++extracted;
        if (opt.early_exit && top.v == inst.sink) {
            break;
        }
        relax_out_arcs(inst, st, top.v,
                       [&heap](NodeId v, double d) { heap.push(Entry{d, v}); });
    }
    return finish(inst, st, extracted, out_labels);
}

std::vector<int> check_optimality(const Instance& inst, const LabelState& labels, double tol) {
    std::vector<int> violated;
    for (const Arc& a : inst.graph.arcs) {
        const double di = labels.dist[static_cast<std::size_t>(a.tail)];
        const double dj = labels.dist[static_cast<std::size_t>(a.head)];
        if (dj < a.loss * std::min(a.capacity, di) - tol) {
            violated.push_back(a.id);
        }
    }
    return violated;
}

Path reconstruct_path(const Instance& inst, const LabelState& labels, NodeId sink) {
    const double d = labels.dist[static_cast<std::size_t>(sink)];
    if (!(d > 0.0) || std::isinf(d)) {
        throw std::invalid_argument("no path: sink label is not positive and finite");
    }
    Path reversed;
    NodeId v = sink;
    int steps = 0;
    while (v != inst.source) {
        const int id = labels.pred[static_cast<std::size_t>(v)];
        if (id == 0) {
            throw std::runtime_error("broken predecessor chain");
        }
        reversed.push_back(id);
        v = inst.graph.arc(id).tail;
        if (++steps > inst.graph.node_count) {
            throw std::runtime_error("predecessor cycle");
        }
    }
    std::reverse(reversed.begin(), reversed.end());
    return reversed;
}

}  // namespace gmcp
