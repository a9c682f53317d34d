#include "gmcp/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>

#include "gmcp/instance_io.hpp"
#include "gmcp/path_eval.hpp"

namespace gmcp {

EnumerationLimitExceeded::EnumerationLimitExceeded(int nodes, int cap)
    : std::runtime_error("instance has " + std::to_string(nodes) +
                         " nodes, enumeration cap is " + std::to_string(cap)),
      node_count(nodes),
      node_cap(cap) {}

namespace {

struct Enumerator {
    const Instance& inst;
    const std::function<void(const Path&)>& fn;
    std::vector<char> on_path;
    Path arcs;

    void dfs(NodeId v) {
        if (v == inst.sink) {
            fn(arcs);
            return;
        }
        for (int id : inst.graph.out_arcs[static_cast<std::size_t>(v)]) {
            const Arc& a = inst.graph.arc(id);
            if (on_path[static_cast<std::size_t>(a.head)]) {
                continue;
            }
            on_path[static_cast<std::size_t>(a.head)] = 1;
            arcs.push_back(id);
            dfs(a.head);
            arcs.pop_back();
            on_path[static_cast<std::size_t>(a.head)] = 0;
        }
    }
};

struct BranchBest {
    bool found = false;
    double value = 0.0;
    Path path;
    std::int64_t enumerated = 0;

    // value first, then lexicographically smallest arc-id sequence
    void offer(double v, const Path& p) {
        ++enumerated;
        if (!found || v > value ||
            (v == value && std::lexicographical_compare(p.begin(), p.end(), path.begin(), path.end()))) {
            found = true;
            value = v;
            path = p;
        }
    }
};

Solution from_best(const BranchBest& best) {
    Solution sol;
    sol.iterations = static_cast<int>(std::min<std::int64_t>(best.enumerated, INT32_MAX));
    if (best.found && best.value > 0.0) {
        sol.status = SolveStatus::Optimal;
        sol.value = best.value;
        sol.path = best.path;
    }
    return sol;
}

void check_cap(const Instance& inst, const OracleOptions& opt) {
    if (inst.graph.node_count > opt.node_cap) {
        throw EnumerationLimitExceeded(inst.graph.node_count, opt.node_cap);
    }
}

}  // namespace

void for_each_simple_st_path(const Instance& inst, const std::function<void(const Path&)>& fn,
                             const OracleOptions& opt) {
    check_cap(inst, opt);
    Enumerator e{inst, fn,
                 std::vector<char>(static_cast<std::size_t>(inst.graph.node_count) + 1, 0),
                 {}};
    e.on_path[static_cast<std::size_t>(inst.source)] = 1;
    e.dfs(inst.source);
}

Solution brute_force_serial(const Instance& inst, const OracleOptions& opt) {
    BranchBest best;
    for_each_simple_st_path(
        inst, [&](const Path& p) { best.offer(deliverable_flow(inst, p).delivered, p); }, opt);
    return from_best(best);
}

Solution brute_force(const Instance& inst, const OracleOptions& opt) {
    check_cap(inst, opt);
    const auto& first = inst.graph.out_arcs[static_cast<std::size_t>(inst.source)];
    const std::int64_t branches = static_cast<std::int64_t>(first.size());
    std::vector<BranchBest> per_branch(first.size());

#pragma omp parallel for schedule(dynamic)
    for (std::int64_t b = 0; b < branches; ++b) {
        BranchBest& best = per_branch[static_cast<std::size_t>(b)];
        Enumerator e{inst,
                     [&](const Path& p) { best.offer(deliverable_flow(inst, p).delivered, p); },
                     std::vector<char>(static_cast<std::size_t>(inst.graph.node_count) + 1, 0),
                     {}};
        const int id = first[static_cast<std::size_t>(b)];
        const Arc& a = inst.graph.arc(id);
        e.on_path[static_cast<std::size_t>(inst.source)] = 1;
        e.on_path[static_cast<std::size_t>(a.head)] = 1;
        e.arcs.push_back(id);
        e.dfs(a.head);
    }

    // merge in branch (= lexicographic) order, independent of scheduling
    BranchBest merged;
    for (const BranchBest& b : per_branch) {
        merged.enumerated += b.enumerated;
        if (!b.found) {
            continue;
        }
        if (!merged.found || b.value > merged.value ||
            (b.value == merged.value &&
             std::lexicographical_compare(b.path.begin(), b.path.end(), merged.path.begin(),
                                          merged.path.end()))) {
            merged.found = true;
            merged.value = b.value;
            merged.path = b.path;
        }
    }
    return from_best(merged);
}

namespace {

// one linear term of an LP row
struct Term {
    double coef;
    std::string var;
};

void append_terms(std::string& out, const std::vector<Term>& terms) {
    bool leading = true;
    for (const Term& t : terms) {
        const double mag = std::abs(t.coef);
        if (leading) {
            if (t.coef < 0) {
                out += '-';
            }
            leading = false;
        } else {
            out += t.coef < 0 ? " - " : " + ";
        }
        if (mag != 1.0) {
            out += format_double(mag);
            out += ' ';
        }
        out += t.var;
    }
}

}  // namespace

std::string export_milp(const Instance& inst) {
    const Graph& g = inst.graph;
    std::string out;
    out += "\\ generalized maximum capacity path model\n";
    out += "Maximize\n obj: vt\nSubject To\n";

    std::vector<std::vector<int>> in_arcs(static_cast<std::size_t>(g.node_count) + 1);
    for (const Arc& a : g.arcs) {
        in_arcs[static_cast<std::size_t>(a.head)].push_back(a.id);
    }

    for (NodeId i = 1; i <= g.node_count; ++i) {
        std::vector<Term> terms;
        for (int id : g.out_arcs[static_cast<std::size_t>(i)]) {
            terms.push_back(Term{1.0, "x_" + std::to_string(id)});
        }
        for (int id : in_arcs[static_cast<std::size_t>(i)]) {
            terms.push_back(Term{-g.arc(id).loss, "x_" + std::to_string(id)});
        }
        if (i == inst.source) {
            terms.push_back(Term{-1.0, "vs"});
        } else if (i == inst.sink) {
            terms.push_back(Term{1.0, "vt"});
        }
        if (terms.empty()) {
            continue;  // isolated node: empty row elided
        }
        out += " bal_" + std::to_string(i) + ": ";
        append_terms(out, terms);
        out += " = 0\n";
    }

    for (const Arc& a : g.arcs) {
        out += " cap_" + std::to_string(a.id) + ": ";
        append_terms(out, {Term{1.0, "x_" + std::to_string(a.id)},
                           Term{-a.capacity, "y_" + std::to_string(a.id)}});
        out += " <= 0\n";
    }

    for (NodeId i = 1; i <= g.node_count; ++i) {
        if (i == inst.sink || g.out_arcs[static_cast<std::size_t>(i)].empty()) {
            continue;
        }
        std::vector<Term> terms;
        for (int id : g.out_arcs[static_cast<std::size_t>(i)]) {
            terms.push_back(Term{1.0, "y_" + std::to_string(id)});
        }
        out += " deg_" + std::to_string(i) + ": ";
        append_terms(out, terms);
        out += " <= 1\n";
    }

    if (g.arc_count() > 0) {
        out += "Binaries\n";
        for (const Arc& a : g.arcs) {
            out += " y_" + std::to_string(a.id) + "\n";
        }
    }
    out += "End\n";
    return out;
}

FeasibilityReport check_feasible(const Instance& inst, const Solution& solution, double tol) {
    if (solution.status != SolveStatus::Optimal) {
        throw std::invalid_argument("check_feasible needs an Optimal solution");
    }
    if (!is_valid_st_path(inst, solution.path)) {
        throw std::invalid_argument("solution path is not a valid source-to-sink path");
    }
    const Graph& g = inst.graph;
    const Path& path = solution.path;
    const std::size_t k = path.size();

    // maximal feasible push: x entering position j is delivered / prod(p_j..p_k);
    // computed as a forward chain so interior balance rows are exactly zero.
    const SaturationReport rep = deliverable_flow(inst, path);
    std::vector<double> losses(k);
    for (std::size_t j = 0; j < k; ++j) {
        losses[j] = g.arc(path[j]).loss;
    }
    double suffix_all = 1.0;
    for (std::size_t j = k; j-- > 0;) {
        suffix_all = losses[j] * suffix_all;
    }
    std::vector<double> x_on_path(k, 0.0);
    x_on_path[0] = rep.delivered / suffix_all;
    for (std::size_t j = 1; j < k; ++j) {
        x_on_path[j] = losses[j - 1] * x_on_path[j - 1];
    }

    std::vector<double> x(static_cast<std::size_t>(g.arc_count()) + 1, 0.0);
    std::vector<char> y(static_cast<std::size_t>(g.arc_count()) + 1, 0);
    for (std::size_t j = 0; j < k; ++j) {
        x[static_cast<std::size_t>(path[j])] = x_on_path[j];
        y[static_cast<std::size_t>(path[j])] = 1;
    }

    FeasibilityReport report;
    report.tolerance = tol;
    report.v_s = x_on_path[0];
    report.v_t = solution.value;

    auto add_row = [&report, tol](std::string name, double residual, bool equality) {
        const bool violated = equality ? std::abs(residual) > tol : residual > tol;
        if (violated) {
            report.violations.push_back(name);
        }
        report.rows.push_back(ResidualRow{std::move(name), residual, equality});
    };

    std::vector<std::vector<int>> in_arcs(static_cast<std::size_t>(g.node_count) + 1);
    for (const Arc& a : g.arcs) {
        in_arcs[static_cast<std::size_t>(a.head)].push_back(a.id);
    }
    for (NodeId i = 1; i <= g.node_count; ++i) {
        const bool incident = !g.out_arcs[static_cast<std::size_t>(i)].empty() ||
                              !in_arcs[static_cast<std::size_t>(i)].empty();
        if (!incident && i != inst.source && i != inst.sink) {
            continue;
        }
        double lhs = 0.0;
        for (int id : g.out_arcs[static_cast<std::size_t>(i)]) {
            lhs += x[static_cast<std::size_t>(id)];
        }
        for (int id : in_arcs[static_cast<std::size_t>(i)]) {
            const double in_flow = x[static_cast<std::size_t>(id)];
            if (in_flow != 0.0) {
                lhs -= g.arc(id).loss * in_flow;
            }
        }
        if (i == inst.source) {
            lhs -= report.v_s;
        } else if (i == inst.sink) {
            lhs += report.v_t;
        }
        add_row("bal_" + std::to_string(i), lhs, true);
    }

    for (const Arc& a : g.arcs) {
        const double bound = y[static_cast<std::size_t>(a.id)] ? a.capacity : 0.0;
        add_row("cap_" + std::to_string(a.id), x[static_cast<std::size_t>(a.id)] - bound, false);
    }

    for (NodeId i = 1; i <= g.node_count; ++i) {
        if (i == inst.sink || g.out_arcs[static_cast<std::size_t>(i)].empty()) {
            continue;
        }
        int count = 0;
        for (int id : g.out_arcs[static_cast<std::size_t>(i)]) {
            count += y[static_cast<std::size_t>(id)];
        }
        add_row("deg_" + std::to_string(i), static_cast<double>(count) - 1.0, false);
    }

    // objective row: v_t is the claimed value by construction, so any value
    // inflation surfaces in the sink balance (v_t vs the arrived flow).
    add_row("obj", report.v_t - solution.value, true);

    report.feasible = report.violations.empty();
    return report;
}

}  // namespace gmcp
