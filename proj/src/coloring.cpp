#include "rainbow/coloring.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "rainbow/analysis.hpp"
#include "rainbow/error.hpp"

namespace rainbow {

EdgeIndex::EdgeIndex(const Graph& g)
    : n_(g.order()),
      edges_(g.edges()),
      ids_(static_cast<std::size_t>(n_) * n_, -1),
      offset_(n_ + 1, 0) {
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    auto [u, v] = edges_[i];
    ids_[static_cast<std::size_t>(u) * n_ + v] = static_cast<int>(i);
    ids_[static_cast<std::size_t>(v) * n_ + u] = static_cast<int>(i);
    ++offset_[u + 1];
    ++offset_[v + 1];
  }
  for (int v = 0; v < n_; ++v) offset_[v + 1] += offset_[v];
  incidence_.resize(offset_[n_]);
  auto fill = offset_;
  // neighbours come out ascending because edges are lexicographic
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : g.neighbors(u))
      incidence_[fill[u]++] = {v, id(u, v)};
}

EdgeColoring::EdgeColoring(int n, std::vector<Edge> edges, std::span<const int> colors)
    : n_(n), edges_(std::move(edges)) {
  if (colors.size() != edges_.size())
    throw Error(ErrorKind::Coverage, "colour count does not match edge count");
  if (!std::is_sorted(edges_.begin(), edges_.end()))
    throw Error(ErrorKind::InvalidArgument, "colouring edges must be sorted");
  std::vector<int> relabel;
  colors_.reserve(colors.size());
  for (int c : colors) {
    if (c < 0) throw Error(ErrorKind::InvalidArgument, "negative colour id");
    if (static_cast<std::size_t>(c) >= relabel.size()) relabel.resize(c + 1, -1);
    if (relabel[c] < 0) relabel[c] = num_colors_++;
    colors_.push_back(relabel[c]);
  }
}

std::optional<int> EdgeColoring::color(Vertex u, Vertex v) const {
  Edge e{std::min(u, v), std::max(u, v)};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return std::nullopt;
  return colors_[it - edges_.begin()];
}

bool EdgeColoring::covers(const Graph& g) const {
  return g.order() == n_ && g.edges() == edges_;
}

EdgeColoring uniform_coloring(const Graph& g) {
  std::vector<int> colors(g.size(), 0);
  return EdgeColoring(g.order(), g.edges(), colors);
}

EdgeColoring distinct_coloring(const Graph& g) {
  std::vector<int> colors(g.size());
  for (int i = 0; i < g.size(); ++i) colors[i] = i;
  return EdgeColoring(g.order(), g.edges(), colors);
}

// --- builder ---------------------------------------------------------------

ColoringBuilder::ColoringBuilder(const Graph& target)
    : index_(target), colors_(target.size(), -1) {}

void ColoringBuilder::set(Vertex u, Vertex v, int color) {
  int id = index_.id(u, v);
  if (id < 0)
    throw Error(ErrorKind::Internal, "colouring a non-edge " + std::to_string(u) +
                                         "-" + std::to_string(v));
  colors_[id] = color;
}

void ColoringBuilder::set_between(std::span<const Vertex> a, std::span<const Vertex> b,
                                  int color) {
  for (Vertex u : a)
    for (Vertex v : b)
      if (int id = u == v ? -1 : index_.id(u, v); id >= 0) colors_[id] = color;
}

void ColoringBuilder::set_within(std::span<const Vertex> a, int color) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (int id = index_.id(a[i], a[j]); id >= 0) colors_[id] = color;
}

void ColoringBuilder::set_induced(std::span<const Vertex> vertices,
                                  const EdgeColoring& part, int offset) {
  for (std::size_t i = 0; i < part.edges().size(); ++i) {
    auto [a, b] = part.edges()[i];
    set(vertices[a], vertices[b], part.colors()[i] + offset);
  }
}

void ColoringBuilder::fill_unset(int color) {
  std::replace(colors_.begin(), colors_.end(), -1, color);
}

bool ColoringBuilder::is_set(Vertex u, Vertex v) const {
  int id = index_.id(u, v);
  return id >= 0 && colors_[id] >= 0;
}

EdgeColoring ColoringBuilder::build() const {
  if (std::find(colors_.begin(), colors_.end(), -1) != colors_.end())
    throw Error(ErrorKind::Internal, "colouring left an edge uncoloured");
  return EdgeColoring(index_.order(), index_.edges(), colors_);
}

// --- verifier --------------------------------------------------------------

namespace {
constexpr std::size_t kDenseStateLimit = std::size_t{1} << 22;
}

RainbowReachability::RainbowReachability(const Graph& g)
    : index_(g), reached_(g.order(), 0) {}

bool RainbowReachability::search_from(Vertex source, std::span<const int> edge_colors,
                                      int palette, int max_length) {
  const int n = index_.order();
  const bool dense = palette < 32 &&
                     (static_cast<std::size_t>(n) << palette) <= kDenseStateLimit;
  if (dense) {
    std::size_t states = static_cast<std::size_t>(n) << palette;
    if (stamp_.size() < states) stamp_.assign(states, 0);
    if (++epoch_ == 0) {
      std::fill(stamp_.begin(), stamp_.end(), 0);
      epoch_ = 1;
    }
  } else {
    sparse_.assign(n, {});
  }
  auto first_visit = [&](Vertex v, std::uint64_t mask) {
    if (dense) {
      auto& s = stamp_[mask * n + v];
      if (s == epoch_) return false;
      s = epoch_;
      return true;
    }
    return sparse_[v].insert(mask).second;
  };

  std::fill(reached_.begin(), reached_.end(), 0);
  int missing = n - 1 - source;  // only targets above the source matter
  if (missing <= 0) return true;
  queue_.clear();
  queue_.push_back({source, 0, 0});
  first_visit(source, 0);
  // FIFO order expands states by walk length, i.e. by colour-set size when
  // there are no wildcards.
  for (std::size_t head = 0; head < queue_.size(); ++head) {
    const State s = queue_[head];
    if (s.length == max_length) continue;
    for (const auto& inc : index_.incident(s.v)) {
      std::uint64_t mask = s.mask;
      if (int c = edge_colors[inc.edge]; c >= 0) {
        const std::uint64_t bit = std::uint64_t{1} << c;
        if (mask & bit) continue;
        mask |= bit;
      }
      if (!first_visit(inc.to, mask)) continue;
      if (inc.to > source && !reached_[inc.to]) {
        reached_[inc.to] = 1;
        if (--missing == 0) return true;
      }
      queue_.push_back({inc.to, mask, s.length + 1});
    }
  }
  return false;
}

std::optional<std::pair<Vertex, Vertex>> RainbowReachability::first_disconnected_pair(
    std::span<const int> edge_colors, int palette, int max_length) {
  if (palette > kMaxPalette)
    throw Error(ErrorKind::InvalidArgument,
                "palettes above 64 colours are not supported by the verifier");
  const int n = index_.order();
  max_length = std::min(max_length, n - 1);
  for (Vertex s = 0; s + 1 < n; ++s) {
    if (search_from(s, edge_colors, palette, max_length)) continue;
    for (Vertex t = s + 1; t < n; ++t)
      if (!reached_[t]) return std::pair{s, t};
  }
  return std::nullopt;
}

RainbowVerdict verify_rainbow_connected(const Graph& g, const EdgeColoring& col) {
  if (!col.covers(g))
    throw Error(ErrorKind::Coverage, "colouring does not cover the edge set exactly");
  if (!is_connected(g)) throw Error(ErrorKind::NotConnected, "graph not connected");
  RainbowReachability reach(g);
  RainbowVerdict verdict;
  verdict.witness =
      reach.first_disconnected_pair(col.colors(), col.num_colors(), col.num_colors());
  verdict.rainbow_connected = !verdict.witness.has_value();
  return verdict;
}

// --- composition -----------------------------------------------------------

EdgeColoring compose_partition_coloring(const Graph& g, std::span<const VertexSet> parts,
                                        std::span<const EdgeColoring> part_colorings) {
  const int n = g.order();
  if (parts.size() != part_colorings.size())
    throw Error(ErrorKind::InvalidArgument, "one colouring per part required");
  std::vector<int> part_of(n, -1);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i].empty()) throw Error(ErrorKind::InvalidArgument, "empty part");
    for (Vertex v : parts[i]) {
      if (v < 0 || v >= n || part_of[v] >= 0)
        throw Error(ErrorKind::InvalidArgument, "parts do not partition the vertex set");
      part_of[v] = static_cast<int>(i);
    }
  }
  if (std::find(part_of.begin(), part_of.end(), -1) != part_of.end())
    throw Error(ErrorKind::InvalidArgument, "parts do not partition the vertex set");

  ColoringBuilder builder(g);
  int offset = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    Graph sub = induced_subgraph(g, parts[i]);
    if (!is_connected(sub))
      throw Error(ErrorKind::Precondition,
                  "part " + std::to_string(i) + " induces a disconnected subgraph");
    if (!part_colorings[i].covers(sub))
      throw Error(ErrorKind::Coverage,
                  "colouring of part " + std::to_string(i) + " does not match it");
    if (!verify_rainbow_connected(sub, part_colorings[i]))
      throw Error(ErrorKind::Precondition, "colouring of part " + std::to_string(i) +
                                               " is not rainbow connected");
    builder.set_induced(parts[i], part_colorings[i], offset);
    offset += part_colorings[i].num_colors();
  }

  // BFS spanning tree of the quotient, scanning vertices and neighbours in
  // ascending order so the tree is deterministic.
  std::vector<char> joined(parts.size(), 0);
  std::vector<std::size_t> queue{0};
  joined[0] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (Vertex u : parts[queue[head]]) {
      for (Vertex w : g.neighbors(u)) {
        auto p = static_cast<std::size_t>(part_of[w]);
        if (joined[p]) continue;
        joined[p] = 1;
        builder.set(u, w, offset++);
        queue.push_back(p);
      }
    }
  }
  if (queue.size() != parts.size())
    throw Error(ErrorKind::NotConnected, "graph not connected");
  builder.fill_unset(0);
  return builder.build();
}

int lower_bounds(const Graph& g) {
  auto diam = diameter(g);
  if (!diam) throw Error(ErrorKind::NotConnected, "graph not connected");
  return std::max(*diam, static_cast<int>(bridges(g).size()));
}

// --- text format -----------------------------------------------------------

EdgeColoring read_coloring(std::istream& in, const Graph& g) {
  EdgeIndex index(g);
  std::vector<int> colors(g.size(), -1);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream ls(line);
    long u = -1, v = -1, k = -1;
    std::string extra;
    if (!(ls >> u >> v >> k) || (ls >> extra) || k < 0)
      throw Error(ErrorKind::Parse, "colouring: bad line " + std::to_string(number));
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || u == v ||
        index.id(static_cast<int>(u), static_cast<int>(v)) < 0)
      throw Error(ErrorKind::Coverage,
                  "colouring: line " + std::to_string(number) + " names a non-edge");
    int id = index.id(static_cast<int>(u), static_cast<int>(v));
    if (colors[id] >= 0)
      throw Error(ErrorKind::Coverage,
                  "colouring: edge repeated at line " + std::to_string(number));
    colors[id] = static_cast<int>(k);
  }
  for (std::size_t i = 0; i < colors.size(); ++i)
    if (colors[i] < 0)
      throw Error(ErrorKind::Coverage,
                  "colouring: edge " + std::to_string(index.edges()[i].u) + " " +
                      std::to_string(index.edges()[i].v) + " has no colour");
  return EdgeColoring(g.order(), index.edges(), colors);
}

void write_coloring(std::ostream& out, const EdgeColoring& col) {
  for (std::size_t i = 0; i < col.edges().size(); ++i)
    out << col.edges()[i].u << ' ' << col.edges()[i].v << ' ' << col.colors()[i] << '\n';
}

}  // namespace rainbow
