#include "rainbow/graph_io.hpp"

#include <istream>
#include <ostream>
#include <set>
#include <sstream>

#include "rainbow/error.hpp"

namespace rainbow {

namespace {

[[noreturn]] void parse_error(const std::string& msg) {
  throw Error(ErrorKind::Parse, msg);
}

// Non-comment, non-blank lines with their 1-based line numbers.
struct LineReader {
  std::istream& in;
  int number = 0;

  bool next(std::string& line) {
    while (std::getline(in, line)) {
      ++number;
      auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      return true;
    }
    return false;
  }
};

}  // namespace

Graph from_graph6(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
    line.remove_suffix(1);
  if (line.empty()) parse_error("graph6: empty line");
  for (std::size_t i = 0; i < line.size(); ++i) {
    auto c = static_cast<unsigned char>(line[i]);
    if (c < 63 || c > 126)
      parse_error("graph6: byte " + std::to_string(i) + " (value " +
                  std::to_string(c) + ") outside 63..126");
  }
  if (line[0] == 126)
    parse_error("graph6: long-form size header (n >= 63) unsupported at byte 0");
  const int n = line[0] - 63;
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t need = (bits + 5) / 6;
  if (line.size() - 1 < need)
    parse_error("graph6: truncated bit vector, expected " + std::to_string(need) +
                " data bytes after byte 0, found " + std::to_string(line.size() - 1));
  if (line.size() - 1 > need)
    parse_error("graph6: unexpected trailing data at byte " + std::to_string(need + 1));

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      int byte = line[1 + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.push_back({i, j});
    }
  }
  return Graph(n, edges);
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxGraph6Order)
    throw Error(ErrorKind::InvalidArgument,
                "graph6 output limited to n <= 62; use the edge-list format");
  std::string out(1, static_cast<char>(n + 63));
  int acc = 0, fill = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++fill == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = fill = 0;
      }
    }
  }
  if (fill > 0) out.push_back(static_cast<char>((acc << (6 - fill)) + 63));
  return out;
}

Graph read_edge_list(std::istream& in) {
  LineReader reader{in};
  std::string line;
  if (!reader.next(line)) parse_error("edge list: missing \"n m\" header");
  long n = -1, m = -1;
  {
    std::istringstream hs(line);
    if (!(hs >> n >> m) || n < 0 || m < 0)
      parse_error("edge list: bad header at line " + std::to_string(reader.number));
  }
  std::vector<Edge> edges;
  std::set<Edge> seen;
  for (long i = 0; i < m; ++i) {
    if (!reader.next(line))
      parse_error("edge list: expected " + std::to_string(m) + " edges, found " +
                  std::to_string(i));
    std::istringstream ls(line);
    long u = -1, v = -1;
    std::string extra;
    if (!(ls >> u >> v) || (ls >> extra))
      parse_error("edge list: bad edge at line " + std::to_string(reader.number));
    if (u < 0 || v < 0 || u >= n || v >= n || u == v)
      parse_error("edge list: invalid endpoints at line " +
                  std::to_string(reader.number));
    Edge e{static_cast<int>(std::min(u, v)), static_cast<int>(std::max(u, v))};
    if (!seen.insert(e).second)
      parse_error("edge list: duplicate edge at line " + std::to_string(reader.number));
    edges.push_back(e);
  }
  if (reader.next(line))
    parse_error("edge list: unexpected content at line " + std::to_string(reader.number));
  return Graph(static_cast<int>(n), edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace rainbow
