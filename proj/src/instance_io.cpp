#include "gmcp/instance_io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <sstream>

namespace gmcp {

ParseError::ParseError(int line_number, const std::string& message)
    : std::runtime_error("line " + std::to_string(line_number) + ": " + message),
      line(line_number) {}

namespace {

struct Cursor {
    const char* p;

    void skip_blanks() {
        while (*p == ' ' || *p == '\t') ++p;
    }
    bool at_end() {
        skip_blanks();
        return *p == '\0';
    }
};

bool next_int(Cursor& c, long long& out) {
    c.skip_blanks();
    char* end = nullptr;
    errno = 0;
    const long long v = std::strtoll(c.p, &end, 10);
    if (end == c.p || errno == ERANGE) {
        return false;
    }
    if (*end != '\0' && *end != ' ' && *end != '\t') {
        return false;
    }
    c.p = end;
    out = v;
    return true;
}

bool next_real(Cursor& c, double& out) {
    c.skip_blanks();
    char* end = nullptr;
    const double v = std::strtod(c.p, &end);
    if (end == c.p) {
        return false;
    }
    if (*end != '\0' && *end != ' ' && *end != '\t') {
        return false;
    }
    c.p = end;
    out = v;
    return true;
}

}  // namespace

Instance parse_instance(std::istream& in) {
    std::string line;
    int lineno = 0;
    bool have_problem = false;
    long long n = 0, m = 0, s = 0, t = 0;
    std::vector<Arc> arcs;

    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        Cursor c{line.c_str()};
        c.skip_blanks();
        if (*c.p == '\0') {
            continue;
        }
        const char kind = *c.p;
        ++c.p;
        if (*c.p != '\0' && *c.p != ' ' && *c.p != '\t') {
            throw ParseError(lineno, "malformed line");
        }

        if (kind == 'c') {
            continue;
        }
        if (kind == 'p') {
            if (have_problem) {
                throw ParseError(lineno, "duplicate problem line");
            }
            c.skip_blanks();
            static constexpr char tag[] = "gmcp";
            for (const char* q = tag; *q; ++q, ++c.p) {
                if (*c.p != *q) {
                    throw ParseError(lineno, "problem line must read 'p gmcp ...'");
                }
            }
            if (!next_int(c, n) || !next_int(c, m) || !next_int(c, s) || !next_int(c, t) ||
                !c.at_end()) {
                throw ParseError(lineno, "malformed problem line");
            }
            if (n < 2) {
                throw ParseError(lineno, "node count must be at least 2");
            }
            if (m < 0) {
                throw ParseError(lineno, "negative arc count");
            }
            if (s < 1 || s > n) {
                throw ParseError(lineno, "source out of range");
            }
            if (t < 1 || t > n) {
                throw ParseError(lineno, "sink out of range");
            }
            if (s == t) {
                throw ParseError(lineno, "source equals sink");
            }
            have_problem = true;
            arcs.reserve(static_cast<std::size_t>(m));
            continue;
        }
        if (kind == 'a') {
            if (!have_problem) {
                throw ParseError(lineno, "arc line before problem line");
            }
            if (static_cast<long long>(arcs.size()) == m) {
                throw ParseError(lineno, "more arc lines than declared");
            }
            long long tail = 0, head = 0;
            double capacity = 0, loss = 0;
            if (!next_int(c, tail) || !next_int(c, head) || !next_real(c, capacity) ||
                !next_real(c, loss) || !c.at_end()) {
                throw ParseError(lineno, "malformed arc line");
            }
            if (tail < 1 || tail > n) {
                throw ParseError(lineno, "tail out of range");
            }
            if (head < 1 || head > n) {
                throw ParseError(lineno, "head out of range");
            }
            if (tail == head) {
                throw ParseError(lineno, "self-loop");
            }
            if (!std::isfinite(capacity) || capacity < 0) {
                throw ParseError(lineno, "capacity must be finite and nonnegative");
            }
            if (!std::isfinite(loss) || loss <= 0) {
                throw ParseError(lineno, "loss factor must be finite and positive");
            }
            arcs.push_back(Arc{0, static_cast<NodeId>(tail), static_cast<NodeId>(head),
                               capacity, loss, false});
            continue;
        }
        throw ParseError(lineno, "malformed line");
    }

    if (!have_problem) {
        throw ParseError(lineno, "missing problem line");
    }
    if (static_cast<long long>(arcs.size()) != m) {
        throw ParseError(lineno, "declared " + std::to_string(m) + " arcs, found " +
                                     std::to_string(arcs.size()));
    }
    Instance inst;
    inst.graph = build_graph(static_cast<int>(n), std::move(arcs));
    inst.source = static_cast<NodeId>(s);
    inst.sink = static_cast<NodeId>(t);
    return inst;
}

Instance parse_instance(const std::string& text) {
    std::istringstream in(text);
    return parse_instance(in);
}

std::string format_double(double v) {
    char buf[40];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void serialize_instance(const Instance& inst, std::ostream& out) {
    out << "p gmcp " << inst.graph.node_count << ' ' << inst.graph.arc_count() << ' '
        << inst.source << ' ' << inst.sink << '\n';
    for (const Arc& a : inst.graph.arcs) {
        out << "a " << a.tail << ' ' << a.head << ' ' << format_double(a.capacity) << ' '
            << format_double(a.loss) << '\n';
    }
}

std::string serialize_instance(const Instance& inst) {
    std::ostringstream out;
    serialize_instance(inst, out);
    return out.str();
}

std::vector<Violation> validate(const Instance& inst) {
    std::vector<Violation> out;
    const Graph& g = inst.graph;
    auto error = [&out](int arc_id, std::string msg) {
        out.push_back(Violation{false, arc_id, std::move(msg)});
    };

    if (g.node_count < 2) {
        error(0, "node count must be at least 2");
    }
    if (inst.source < 1 || inst.source > g.node_count) {
        error(0, "source out of range");
    }
    if (inst.sink < 1 || inst.sink > g.node_count) {
        error(0, "sink out of range");
    }
    if (inst.source == inst.sink) {
        error(0, "source equals sink");
    }

    for (std::size_t i = 0; i < g.arcs.size(); ++i) {
        const Arc& a = g.arcs[i];
        if (a.id != static_cast<int>(i) + 1) {
            error(a.id, "arc id does not match its position");
        }
        if (a.tail < 1 || a.tail > g.node_count || a.head < 1 || a.head > g.node_count) {
            error(a.id, "endpoint out of range");
            continue;
        }
        if (a.tail == a.head) {
            error(a.id, "self-loop");
        }
        if (!std::isfinite(a.capacity) || a.capacity < 0) {
            error(a.id, "negative or non-finite capacity");
        }
        if (!std::isfinite(a.loss) || a.loss <= 0) {
            error(a.id, "nonpositive loss factor");
        } else if (a.loss > 1.0) {
            out.push_back(Violation{true, a.id, "loss factor exceeds 1; apply normalization"});
        }
    }

    // adjacency must list every arc exactly once, under its tail
    if (g.out_arcs.size() != static_cast<std::size_t>(g.node_count) + 1) {
        error(0, "adjacency table has wrong size");
        return out;
    }
    std::vector<int> listed(g.arcs.size() + 1, 0);
    for (int v = 1; v <= g.node_count; ++v) {
        for (int id : g.out_arcs[static_cast<std::size_t>(v)]) {
            if (id < 1 || id > g.arc_count()) {
                error(0, "adjacency references unknown arc " + std::to_string(id));
                continue;
            }
            ++listed[static_cast<std::size_t>(id)];
            if (g.arc(id).tail != v) {
                error(id, "arc listed under a node other than its tail");
            }
        }
    }
    for (int id = 1; id <= g.arc_count(); ++id) {
        if (listed[static_cast<std::size_t>(id)] != 1) {
            error(id, "arc appears " + std::to_string(listed[static_cast<std::size_t>(id)]) +
                          " times in the adjacency");
        }
    }
    return out;
}

}  // namespace gmcp
