#pragma once

#include <optional>
#include <span>
#include <vector>

#include "gmcp/graph.hpp"

namespace gmcp {

/// Replacement arc from the source to the head of a removed arc. Carries the
/// removed arc's capacity and loss (its search weight is their product) and
/// the original-arc subpath it stands for.
struct ArtificialArc {
    NodeId head = 0;
    double capacity = 0.0;
    double loss = 1.0;
    Path prefix;  // simple original-arc path from the source into head
};

/// Mutable overlay used by the iterative solver: original arcs can be
/// removed, artificial source arcs accumulate. Arcs are addressed by handle:
/// 1..m are the original ids, m+1.. the artificial arcs in insertion order.
class WorkingNetwork {
public:
    explicit WorkingNetwork(const Instance& base);

    const Instance& base() const { return *base_; }

    bool is_artificial(int handle) const { return handle > original_count_; }
    bool is_removed(int handle) const;
    int original_id(int handle) const;  // 0 for artificial handles
    NodeId tail(int handle) const;
    NodeId head(int handle) const;
    double capacity(int handle) const;
    double loss(int handle) const;

    /// Search weight: capacity * loss for source-leaving arcs (artificial
    /// included), plain loss otherwise.
    double search_weight(int handle) const;

    void remove_original(int arc_id);

    /// Inserts unless an artificial arc to the same head with an equal or
    /// larger factor already exists (a dominated arc can never lie on a
    /// maximum-product path given first-wins tie-breaking).
    void add_artificial(ArtificialArc arc);

    const ArtificialArc& artificial(int handle) const;
    const std::vector<int>& artificial_handles() const { return artificial_handles_; }

    /// Maps search handles to original arc ids, expanding a leading
    /// artificial arc through its stored prefix. Repeated nodes in the
    /// expansion are spliced out so the result is a simple path.
    Path expand(std::span<const int> handles) const;

private:
    const Instance* base_;
    int original_count_ = 0;
    std::vector<char> removed_;
    std::vector<ArtificialArc> artificials_;
    std::vector<int> artificial_handles_;
    std::vector<double> best_factor_;  // per head; -1 = no artificial yet
};

/// Path of handles maximizing the product of search weights from source to
/// sink (label-setting, multiplicative relaxation), or nullopt when the sink
/// is unreachable. Source-leaving arcs with zero weight are excluded.
std::optional<std::vector<int>> max_reliability_path(const WorkingNetwork& net);

/// Debug view of the additive formulation: -log of the search weight.
double search_length(const WorkingNetwork& net, int handle);

struct Alg1Iteration {
    double assumed = 0.0;    // product of search weights of the found path
    double delivered = 0.0;  // actual deliverable flow of that path
    int saturated_index = 0;
    int removed_arc = 0;     // 0 on the terminating iteration
};

/// Iterative solver: find a maximum-reliability path, locate its last
/// saturated arc, and either terminate (saturated arc first on the path) or
/// replace the saturated arc with an artificial source arc and repeat.
/// Requires all loss factors in (0, 1].
Solution solve_alg1(const Instance& inst, std::vector<Alg1Iteration>* trace = nullptr);

}  // namespace gmcp
