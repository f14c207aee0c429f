#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "rainbow/graph.hpp"

namespace rainbow {

// graph6, short-form size header only (n <= 62).
inline constexpr int kMaxGraph6Order = 62;

/// Parses one graph6 line (a trailing newline is tolerated). Throws
/// Error(Parse) naming the offending byte offset.
Graph from_graph6(std::string_view line);
std::string to_graph6(const Graph& g);

/// Edge-list text: "n m", then m lines "u v" (0-based); '#' lines and blank
/// lines are skipped. Throws Error(Parse) with the line number.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace rainbow
