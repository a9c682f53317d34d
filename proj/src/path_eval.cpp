#include "gmcp/path_eval.hpp"

#include <algorithm>
#include <stdexcept>

namespace gmcp {

SaturationReport saturate(std::span<const double> capacities, std::span<const double> losses) {
    const std::size_t k = capacities.size();
    if (k == 0 || losses.size() != k) {
        throw std::invalid_argument("saturate: empty or mismatched sequences");
    }
    std::vector<double> suffix(k);
    double acc = 1.0;
    for (std::size_t j = k; j-- > 0;) {
        acc = losses[j] * acc;
        suffix[j] = acc;
    }
    SaturationReport rep;
    rep.delivered = kUnboundedFlow;
    for (std::size_t j = 0; j < k; ++j) {
        const double bound = capacities[j] * suffix[j];
        if (bound <= rep.delivered) {  // <=: keep the last minimizer
            rep.delivered = bound;
            rep.saturated_index = static_cast<int>(j) + 1;
        }
    }
    return rep;
}

namespace {

void require_path(const Instance& inst, const Path& path) {
    if (!is_valid_path(inst, path)) {
        throw std::invalid_argument("invalid path for this instance");
    }
}

}  // namespace

SaturationReport deliverable_flow(const Instance& inst, const Path& path) {
    require_path(inst, path);
    std::vector<double> caps, losses;
    caps.reserve(path.size());
    losses.reserve(path.size());
    for (int id : path) {
        const Arc& a = inst.graph.arc(id);
        caps.push_back(a.capacity);
        losses.push_back(a.loss);
    }
    return saturate(caps, losses);
}

Graph normalize_capacities(Graph g) {
    for (Arc& a : g.arcs) {
        if (a.loss > 1.0) {
            a.capacity = std::min(a.capacity, a.capacity / a.loss);
        }
    }
    return g;
}

Instance normalize_capacities(Instance inst) {
    inst.graph = normalize_capacities(std::move(inst.graph));
    return inst;
}

FlowValue path_bottleneck(const Instance& inst, const Path& path) {
    require_path(inst, path);
    FlowValue best = kUnboundedFlow;
    for (int id : path) {
        best = std::min(best, inst.graph.arc(id).capacity);
    }
    return best;
}

double path_reliability(const Instance& inst, const Path& path) {
    require_path(inst, path);
    double product = 1.0;
    for (int id : path) {
        product *= inst.graph.arc(id).loss;
    }
    return product;
}

}  // namespace gmcp
