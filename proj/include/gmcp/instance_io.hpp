#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "gmcp/graph.hpp"

namespace gmcp {

struct ParseError : std::runtime_error {
    ParseError(int line_number, const std::string& message);
    int line = 0;
};

// Instance file format (line oriented, UTF-8):
//   c <anything>                     comment, ignored
//   p gmcp <n> <m> <s> <t>           exactly once, before any arc line
//   a <tail> <head> <cap> <loss>     exactly m lines, arcs numbered in file order
// Blank lines are ignored. The serializer emits the p line followed by the
// a lines in arc-id order, single spaces, "\n" endings, no trailing blanks,
// reals in shortest round-trip decimal form.
Instance parse_instance(std::istream& in);
Instance parse_instance(const std::string& text);

std::string serialize_instance(const Instance& inst);
void serialize_instance(const Instance& inst, std::ostream& out);

struct Violation {
    bool warning = false;
    int arc_id = 0;  // 0 for instance-level findings
    std::string message;
};

/// Structural and numeric checks. Errors make the instance unusable;
/// loss factors above 1 are reported as warnings (capacity normalization
/// required before solving).
std::vector<Violation> validate(const Instance& inst);

/// Shortest decimal representation that round-trips through parsing.
std::string format_double(double v);

}  // namespace gmcp
