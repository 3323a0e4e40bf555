#pragma once

#include <iosfwd>
#include <string>

#include "oddcolor/graph.hpp"

namespace oddcolor {

/// Reads `graph <n> <m>` followed by m lines `e <u> <v>`.
/// Blank lines and `#` comments are skipped. Throws std::invalid_argument
/// with a line number on malformed input.
SimpleGraph read_graph(std::istream& in);
SimpleGraph read_graph_file(const std::string& path);  // "-" reads stdin

void write_graph(std::ostream& out, const SimpleGraph& g);

/// Strips a trailing `#` comment and surrounding whitespace.
std::string strip_comment(const std::string& line);

}  // namespace oddcolor
