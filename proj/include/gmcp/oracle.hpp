#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gmcp/graph.hpp"

namespace gmcp {

struct EnumerationLimitExceeded : std::runtime_error {
    EnumerationLimitExceeded(int node_count, int node_cap);
    int node_count = 0;
    int node_cap = 0;
};

struct OracleOptions {
    int node_cap = 14;  // refuse instances above this many nodes
};

/// Visits every simple source-to-sink path in depth-first order (arcs tried
/// in id order at each node). Throws EnumerationLimitExceeded above node_cap.
void for_each_simple_st_path(const Instance& inst, const std::function<void(const Path&)>& fn,
                             const OracleOptions& opt = {});

/// Exhaustive reference solver: the path maximizing deliverable flow, ties
/// broken by lexicographically smallest arc-id sequence. iterations reports
/// the number of paths enumerated. Parallelized over first-arc branches;
/// results are merged in branch order so the outcome is deterministic.
Solution brute_force(const Instance& inst, const OracleOptions& opt = {});

/// Single-threaded reference enumeration, identical results to brute_force.
Solution brute_force_serial(const Instance& inst, const OracleOptions& opt = {});

/// LP-format mixed binary model of the problem: maximize the flow entering
/// the sink subject to per-node flow balance with losses, per-arc capacity
/// linking x <= u * y, and out-degree <= 1 per node except the sink.
/// Variables are named x_<arcid>, y_<arcid>, vs, vt; output is deterministic.
std::string export_milp(const Instance& inst);

struct ResidualRow {
    std::string row;      // matches the LP export row names
    double residual = 0;  // equality rows: lhs - rhs; inequality rows: lhs - rhs (<= 0 ok)
    bool equality = true;
};

struct FeasibilityReport {
    bool feasible = false;
    double tolerance = 1e-9;
    double v_s = 0.0;  // flow leaving the source implied by the path
    double v_t = 0.0;  // objective; equals the solution value by construction
    std::vector<ResidualRow> rows;
    std::vector<std::string> violations;  // row names beyond tolerance
};

/// Validates an Optimal solution against the model constraints: y is set
/// from the path, x pushes the maximal feasible amount (saturating the last
/// saturated arc) and v_t is the claimed value, so an inflated value shows
/// up as a balance violation at the sink. Throws std::invalid_argument when
/// the path is not a valid source-to-sink path.
FeasibilityReport check_feasible(const Instance& inst, const Solution& solution,
                                 double tol = 1e-9);

}  // namespace gmcp
