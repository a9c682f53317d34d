#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gmcp/graph.hpp"

namespace gmcp {

// Seeded random instance generator. Construction is three-phase and fully
// determined by the config:
//   1. `paths` random simple source-to-sink paths (node length uniform in
//      [2, min(nodes, 20)], intermediates drawn by partial shuffle),
//   2. `cycles` random simple cycles (length uniform in [3, min(nodes, 8)]),
//   3. a background sweep adding each remaining ordered pair independently
//      with probability er_prob (row-major order).
// Duplicate (tail, head) pairs keep the first drawn arc. Capacities are
// uniform in [lo, hi); losses uniform in (lo, hi]. The RNG is std::mt19937_64
// seeded with `seed`; integer draws use lo + (next() % span), real draws use
// (next() >> 11) * 2^-53. All of this is frozen so instances reproduce
// bit-identically across platforms.
struct GenConfig {
    int nodes = 2;
    int paths = 1;
    int cycles = 0;
    double er_prob = 0.0;
    std::uint64_t seed = 0;
    std::array<double, 2> capacity_range{1.0, 100.0};
    std::array<double, 2> loss_range{0.1, 1.0};
};

/// Source is node 1, sink is node `nodes`. Throws std::invalid_argument on
/// invalid configs (nodes < 2, paths < 1, bad ranges, er_prob outside [0,1]).
Instance generate(const GenConfig& config);

/// Streams the instance file without materializing the graph (two passes:
/// count, then emit). Byte-identical to serialize_instance(generate(config)).
/// Returns the arc count.
std::int64_t stream_generate(const GenConfig& config, std::ostream& out);

struct Preset {
    std::string label;
    GenConfig config;
    int instance_count = 1;  // experiment repetition metadata
};

/// The 15 benchmark parameter rows. Rows sharing a node count share the
/// instance-count metadata (1000 nodes: 10000 instances, 2000: 1000,
/// 5000: 100, 10000: 5, 15000: 3, 20000: 2, 25000: 1). Default seed for
/// row k is k.
std::vector<Preset> table1_presets();

}  // namespace gmcp
