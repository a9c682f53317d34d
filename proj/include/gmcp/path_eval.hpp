#pragma once

#include <limits>
#include <span>

#include "gmcp/graph.hpp"

namespace gmcp {

using FlowValue = double;

/// Source label; compares greater than every finite flow value and
/// min(u, kUnboundedFlow) == u.
inline constexpr FlowValue kUnboundedFlow = std::numeric_limits<double>::infinity();

struct SaturationReport {
    FlowValue delivered = 0.0;
    int saturated_index = 0;  // 1-based position of the LAST arc attaining the minimum
};

/// Core evaluation over parallel capacity/loss sequences:
///   delivered = min over j of  u_j * prod(p_j .. p_k)
/// Suffix products are accumulated right to left in one pass; ties in the
/// min scan resolve to the largest index. Comparisons are exact.
SaturationReport saturate(std::span<const double> capacities, std::span<const double> losses);

/// Maximum flow deliverable at the end of the path together with the last
/// saturated position. Throws std::invalid_argument for paths that are not
/// valid chains of this instance.
SaturationReport deliverable_flow(const Instance& inst, const Path& path);

/// Capacity redefinition for arcs with loss above 1: u := min(u, u / p).
/// Loss factors are unchanged; arcs with p <= 1 are untouched bit for bit.
Graph normalize_capacities(Graph g);
Instance normalize_capacities(Instance inst);

/// Minimum capacity along the path (the classic widest-path objective).
FlowValue path_bottleneck(const Instance& inst, const Path& path);

/// Product of loss factors along the path.
double path_reliability(const Instance& inst, const Path& path);

}  // namespace gmcp
