#include "gmcp/netgen.hpp"

#include <ostream>
#include <random>
#include <stdexcept>
#include <unordered_set>

#include "gmcp/instance_io.hpp"

namespace gmcp {

namespace {

// Frozen draw primitives (see the header): std distributions are not
// portable across standard libraries, these are.
std::int64_t draw_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(rng() % span);
}

double draw_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;  // [0, 1)
}

double draw_closed_open(std::mt19937_64& rng, double lo, double hi) {
    return lo + draw_unit(rng) * (hi - lo);  // [lo, hi)
}

double draw_open_closed(std::mt19937_64& rng, double lo, double hi) {
    return lo + (1.0 - draw_unit(rng)) * (hi - lo);  // (lo, hi]
}

void validate_config(const GenConfig& cfg) {
    if (cfg.nodes < 2) throw std::invalid_argument("netgen: nodes must be at least 2");
    if (cfg.paths < 1) throw std::invalid_argument("netgen: paths must be at least 1");
    if (cfg.cycles < 0) throw std::invalid_argument("netgen: cycles must be nonnegative");
    if (!(cfg.er_prob >= 0.0 && cfg.er_prob <= 1.0)) {
        throw std::invalid_argument("netgen: er_prob must lie in [0, 1]");
    }
    if (!(cfg.capacity_range[0] > 0.0) || cfg.capacity_range[0] > cfg.capacity_range[1]) {
        throw std::invalid_argument("netgen: capacity range must be positive and ordered");
    }
    if (!(cfg.loss_range[0] >= 0.0) || cfg.loss_range[0] > cfg.loss_range[1] ||
        !(cfg.loss_range[1] > 0.0) || cfg.loss_range[1] > 1.0) {
        throw std::invalid_argument("netgen: loss range must satisfy (lo, hi] within (0, 1]");
    }
}

template <class OnArc>
std::int64_t generate_arcs(const GenConfig& cfg, OnArc&& emit) {
    validate_config(cfg);
    std::mt19937_64 rng(cfg.seed);
    const int n = cfg.nodes;
    std::int64_t count = 0;
    std::unordered_set<std::int64_t> present;
    const auto key = [n](int a, int b) {
        return static_cast<std::int64_t>(a) * (n + 1) + b;
    };
    // duplicates keep the first drawn arc; a skipped duplicate consumes no draws
    const auto add = [&](int a, int b) {
        if (!present.insert(key(a, b)).second) {
            return;
        }
        const double cap = draw_closed_open(rng, cfg.capacity_range[0], cfg.capacity_range[1]);
        const double loss = draw_open_closed(rng, cfg.loss_range[0], cfg.loss_range[1]);
        ++count;
        emit(a, b, cap, loss);
    };

    // phase 1: guaranteed source-to-sink paths
    std::vector<int> pool;
    pool.reserve(static_cast<std::size_t>(n > 2 ? n - 2 : 0));
    for (int v = 2; v < n; ++v) {
        pool.push_back(v);
    }
    const int max_len = std::min(n, 20);
    for (int p = 0; p < cfg.paths; ++p) {
        const int len = static_cast<int>(draw_int(rng, 2, max_len));
        const int mids = len - 2;
        for (int i = 0; i < mids; ++i) {
            const auto j = draw_int(rng, i, static_cast<std::int64_t>(pool.size()) - 1);
            std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
        }
        int prev = 1;
        for (int i = 0; i < mids; ++i) {
            add(prev, pool[static_cast<std::size_t>(i)]);
            prev = pool[static_cast<std::size_t>(i)];
        }
        add(prev, n);
    }

    // phase 2: cycles
    if (n >= 3 && cfg.cycles > 0) {
        std::vector<int> all;
        all.reserve(static_cast<std::size_t>(n));
        for (int v = 1; v <= n; ++v) {
            all.push_back(v);
        }
        const int cycle_max = std::min(n, 8);
        for (int c = 0; c < cfg.cycles; ++c) {
            const int len = static_cast<int>(draw_int(rng, 3, cycle_max));
            for (int i = 0; i < len; ++i) {
                const auto j = draw_int(rng, i, static_cast<std::int64_t>(all.size()) - 1);
                std::swap(all[static_cast<std::size_t>(i)], all[static_cast<std::size_t>(j)]);
            }
            for (int i = 0; i < len; ++i) {
                add(all[static_cast<std::size_t>(i)], all[static_cast<std::size_t>((i + 1) % len)]);
            }
        }
    }

    // phase 3: background arcs over the remaining ordered pairs, row-major
    if (cfg.er_prob > 0.0) {
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j) {
                if (i == j || present.count(key(i, j))) {
                    continue;
                }
                if (draw_unit(rng) < cfg.er_prob) {
                    const double cap =
                        draw_closed_open(rng, cfg.capacity_range[0], cfg.capacity_range[1]);
                    const double loss =
                        draw_open_closed(rng, cfg.loss_range[0], cfg.loss_range[1]);
                    ++count;
                    emit(i, j, cap, loss);
                }
            }
        }
    }
    return count;
}

}  // namespace

Instance generate(const GenConfig& config) {
    std::vector<Arc> arcs;
    generate_arcs(config, [&arcs](int tail, int head, double cap, double loss) {
        arcs.push_back(Arc{0, tail, head, cap, loss, false});
    });
    Instance inst;
    inst.graph = build_graph(config.nodes, std::move(arcs));
    inst.source = 1;
    inst.sink = config.nodes;
    return inst;
}

std::int64_t stream_generate(const GenConfig& config, std::ostream& out) {
    const std::int64_t m = generate_arcs(config, [](int, int, double, double) {});
    out << "p gmcp " << config.nodes << ' ' << m << ' ' << 1 << ' ' << config.nodes << '\n';
    generate_arcs(config, [&out](int tail, int head, double cap, double loss) {
        out << "a " << tail << ' ' << head << ' ' << format_double(cap) << ' '
            << format_double(loss) << '\n';
    });
    return m;
}

std::vector<Preset> table1_presets() {
    struct Row {
        int nodes;
        int instances;
        int paths;
        int cycles;
        double er_prob;
    };
    // rows sharing a node count share the instance-count metadata
    static constexpr Row rows[15] = {
        {1000, 10000, 500, 100, 0.5},  {1000, 10000, 500, 100, 0.7},
        {1000, 10000, 500, 100, 0.9},  {2000, 1000, 1000, 100, 0.1},
        {2000, 1000, 1000, 250, 0.15}, {2000, 1000, 1000, 500, 0.6},
        {5000, 100, 2500, 1000, 0.1},  {5000, 100, 2500, 1000, 0.2},
        {5000, 100, 2500, 1000, 0.3},  {10000, 5, 5000, 2500, 0.15},
        {10000, 5, 5000, 2500, 0.3},   {10000, 5, 5000, 2500, 0.5},
        {15000, 3, 7500, 1000, 0.15},  {20000, 2, 7500, 1000, 0.15},
        {25000, 1, 8000, 1500, 0.15},
    };
    std::vector<Preset> presets;
    presets.reserve(15);
    for (int i = 0; i < 15; ++i) {
        const Row& r = rows[i];
        Preset p;
        p.label = "preset-" + std::to_string(i + 1);
        p.config.nodes = r.nodes;
        p.config.paths = r.paths;
        p.config.cycles = r.cycles;
        p.config.er_prob = r.er_prob;
        p.config.seed = static_cast<std::uint64_t>(i + 1);
        p.instance_count = r.instances;
        presets.push_back(std::move(p));
    }
    return presets;
}

}  // namespace gmcp
