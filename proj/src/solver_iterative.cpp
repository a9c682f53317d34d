#include "gmcp/solver_iterative.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <unordered_map>

#include "gmcp/path_eval.hpp"

namespace gmcp {

WorkingNetwork::WorkingNetwork(const Instance& base)
    : base_(&base),
      original_count_(base.graph.arc_count()),
      removed_(static_cast<std::size_t>(base.graph.arc_count()) + 1, 0),
      best_factor_(static_cast<std::size_t>(base.graph.node_count) + 1, -1.0) {}

bool WorkingNetwork::is_removed(int handle) const {
    return handle <= original_count_ && removed_[static_cast<std::size_t>(handle)];
}

int WorkingNetwork::original_id(int handle) const {
    return handle <= original_count_ ? handle : 0;
}

NodeId WorkingNetwork::tail(int handle) const {
    if (handle <= original_count_) return base_->graph.arc(handle).tail;
    return base_->source;
}

NodeId WorkingNetwork::head(int handle) const {
    if (handle <= original_count_) return base_->graph.arc(handle).head;
    return artificial(handle).head;
}

double WorkingNetwork::capacity(int handle) const {
    if (handle <= original_count_) return base_->graph.arc(handle).capacity;
    return artificial(handle).capacity;
}

double WorkingNetwork::loss(int handle) const {
    if (handle <= original_count_) return base_->graph.arc(handle).loss;
    return artificial(handle).loss;
}

double WorkingNetwork::search_weight(int handle) const {
    if (tail(handle) == base_->source) {
        return capacity(handle) * loss(handle);
    }
    return loss(handle);
}

void WorkingNetwork::remove_original(int arc_id) {
    removed_[static_cast<std::size_t>(arc_id)] = 1;
}

void WorkingNetwork::add_artificial(ArtificialArc arc) {
    const double factor = arc.capacity * arc.loss;
    double& best = best_factor_[static_cast<std::size_t>(arc.head)];
    if (best >= 0.0 && factor <= best) {
        return;  // dominated: an earlier artificial to this head wins any tie
    }
    best = std::max(best, factor);
    artificials_.push_back(std::move(arc));
    artificial_handles_.push_back(original_count_ + static_cast<int>(artificials_.size()));
}

const ArtificialArc& WorkingNetwork::artificial(int handle) const {
    return artificials_[static_cast<std::size_t>(handle - original_count_) - 1];
}

namespace {

// Walk-to-path simplification: when a node reappears, drop the arcs of the
// cycle and continue from its first occurrence.
Path splice_simple(const Graph& g, const Path& walk) {
    Path out;
    if (walk.empty()) {
        return out;
    }
    std::vector<NodeId> nodes;
    std::unordered_map<NodeId, int> position;
    nodes.push_back(g.arc(walk.front()).tail);
    position[nodes.back()] = 0;
    for (int id : walk) {
        const NodeId to = g.arc(id).head;
        const auto it = position.find(to);
        if (it != position.end()) {
            while (static_cast<int>(nodes.size()) > it->second + 1) {
                position.erase(nodes.back());
                nodes.pop_back();
                out.pop_back();
            }
        } else {
            out.push_back(id);
            nodes.push_back(to);
            position[to] = static_cast<int>(nodes.size()) - 1;
        }
    }
    return out;
}

}  // namespace

Path WorkingNetwork::expand(std::span<const int> handles) const {
    Path walk;
    for (std::size_t i = 0; i < handles.size(); ++i) {
        const int h = handles[i];
        if (is_artificial(h)) {
            if (i != 0) {
                throw std::logic_error("artificial arc beyond the front of a search path");
            }
            const Path& prefix = artificial(h).prefix;
            walk.insert(walk.end(), prefix.begin(), prefix.end());
        } else {
            walk.push_back(h);
        }
    }
    return splice_simple(base_->graph, walk);
}

std::optional<std::vector<int>> max_reliability_path(const WorkingNetwork& net) {
    const Instance& inst = net.base();
    const Graph& g = inst.graph;
    const std::size_t size = static_cast<std::size_t>(g.node_count) + 1;

    std::vector<double> best(size, 0.0);
    std::vector<int> pred(size, 0);
    std::vector<char> done(size, 0);

    struct Entry {
        double r;
        NodeId v;
    };
    struct Less {
        bool operator()(const Entry& a, const Entry& b) const {
            if (a.r != b.r) return a.r < b.r;
            return a.v > b.v;
        }
    };
    std::priority_queue<Entry, std::vector<Entry>, Less> heap;
    best[static_cast<std::size_t>(inst.source)] = 1.0;
    heap.push(Entry{1.0, inst.source});

    while (!heap.empty()) {
        const Entry top = heap.top();
        heap.pop();
        if (done[static_cast<std::size_t>(top.v)]) {
            continue;
        }
        done[static_cast<std::size_t>(top.v)] = 1;
        if (top.v == inst.sink) {
            break;
        }
        auto relax = [&](int handle) {
            const double w = net.search_weight(handle);
            if (top.v == inst.source && !(w > 0.0)) {
                return;  // a zero-weight source arc can never carry positive flow
            }
            const NodeId to = net.head(handle);
            if (done[static_cast<std::size_t>(to)]) {
                return;
            }
            const double cand = top.r * w;
            if (cand > best[static_cast<std::size_t>(to)]) {
                best[static_cast<std::size_t>(to)] = cand;
                pred[static_cast<std::size_t>(to)] = handle;
                heap.push(Entry{cand, to});
            }
        };
        for (int id : g.out_arcs[static_cast<std::size_t>(top.v)]) {
            if (!net.is_removed(id)) {
                relax(id);
            }
        }
        if (top.v == inst.source) {
            for (int h : net.artificial_handles()) {
                relax(h);
            }
        }
    }

    if (!done[static_cast<std::size_t>(inst.sink)]) {
        return std::nullopt;
    }
    std::vector<int> reversed;
    NodeId v = inst.sink;
    while (v != inst.source) {
        const int h = pred[static_cast<std::size_t>(v)];
        reversed.push_back(h);
        v = net.tail(h);
    }
    std::reverse(reversed.begin(), reversed.end());
    return reversed;
}

double search_length(const WorkingNetwork& net, int handle) {
    return -std::log(net.search_weight(handle));
}

namespace {

void require_normalized(const Instance& inst) {
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
            throw std::invalid_argument("loss factors must lie in (0, 1] for the iterative solver");
        }
    }
}

}  // namespace

Solution solve_alg1(const Instance& inst, std::vector<Alg1Iteration>* trace) {
    require_normalized(inst);
    WorkingNetwork net(inst);
    std::vector<double> caps, losses;
    int iterations = 0;

    for (;;) {
        ++iterations;
        const auto found = max_reliability_path(net);
        if (!found) {
            if (trace) {
                trace->push_back(Alg1Iteration{});
            }
            Solution sol;
            sol.status = SolveStatus::NoPath;
            sol.iterations = iterations;
            return sol;
        }
        const std::vector<int>& handles = *found;

        caps.clear();
        losses.clear();
        double assumed = 1.0;
        for (int h : handles) {
            caps.push_back(net.capacity(h));
            losses.push_back(net.loss(h));
            assumed *= net.search_weight(h);
        }
        const SaturationReport rep = saturate(caps, losses);

        if (rep.saturated_index == 1) {
            // The first arc is the last one to saturate: the assumed value is
            // attained, so the path (expanded through any stored prefix) is
            // optimal.
            Solution sol;
            sol.status = SolveStatus::Optimal;
            sol.path = net.expand(handles);
            sol.value = deliverable_flow(inst, sol.path).delivered;
            sol.iterations = iterations;
            if (trace) {
                trace->push_back(Alg1Iteration{assumed, rep.delivered, rep.saturated_index, 0});
            }
            return sol;
        }

        // Positions past the front of a simple search path cannot be
        // artificial (artificial tails are all at the source).
        const int sat_handle = handles[static_cast<std::size_t>(rep.saturated_index) - 1];
        const int removed_id = net.original_id(sat_handle);
        ArtificialArc art;
        art.head = net.head(sat_handle);
        art.capacity = net.capacity(sat_handle);
        art.loss = net.loss(sat_handle);
        art.prefix = net.expand(
            std::span<const int>(handles.data(), static_cast<std::size_t>(rep.saturated_index)));
        if (trace) {
            trace->push_back(Alg1Iteration{assumed, rep.delivered, rep.saturated_index, removed_id});
        }
        net.remove_original(removed_id);
        net.add_artificial(std::move(art));
    }
}

}  // namespace gmcp
