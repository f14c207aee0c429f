#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <unordered_set>
#include <utility>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

/// Lexicographic edge numbering of a graph with per-vertex incidence lists.
class EdgeIndex {
 public:
  struct Incidence {
    Vertex to;
    int edge;
  };

  explicit EdgeIndex(const Graph& g);

  int order() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// Edge id of {u,v}, or -1 when u,v are not adjacent.
  int id(Vertex u, Vertex v) const noexcept {
    return ids_[static_cast<std::size_t>(u) * n_ + v];
  }
  std::span<const Incidence> incident(Vertex v) const noexcept {
    return {incidence_.data() + offset_[v], incidence_.data() + offset_[v + 1]};
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> ids_;
  std::vector<std::size_t> offset_;
  std::vector<Incidence> incidence_;
};

/// Total map from the edges of a graph to colour ids 0..c-1. Ids are
/// canonical: colour k first appears before colour k+1 in lexicographic edge
/// order. Only the partition into colour classes is significant.
class EdgeColoring {
 public:
  EdgeColoring() = default;

  /// `colors[i]` is the colour of `edges[i]`; edges must be sorted and any
  /// non-negative ids are accepted and relabelled.
  EdgeColoring(int n, std::vector<Edge> edges, std::span<const int> colors);

  int graph_order() const noexcept { return n_; }
  int graph_size() const noexcept { return static_cast<int>(edges_.size()); }
  int num_colors() const noexcept { return num_colors_; }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<int>& colors() const noexcept { return colors_; }

  std::optional<int> color(Vertex u, Vertex v) const;

  /// True iff this colours exactly E(g).
  bool covers(const Graph& g) const;

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> colors_;
  int num_colors_ = 0;
};

/// Every edge of g receives colour 0.
EdgeColoring uniform_coloring(const Graph& g);

/// Every edge of g receives its own colour.
EdgeColoring distinct_coloring(const Graph& g);

/// Incrementally assembles a colouring of a fixed target graph. Later
/// assignments overwrite earlier ones.
class ColoringBuilder {
 public:
  explicit ColoringBuilder(const Graph& target);

  void set(Vertex u, Vertex v, int color);
  /// Colours every target edge with one end in `a` and the other in `b`.
  void set_between(std::span<const Vertex> a, std::span<const Vertex> b, int color);
  void set_within(std::span<const Vertex> a, int color);
  /// Copies `part` (a colouring of the subgraph induced on `vertices`, with
  /// local vertex i = vertices[i]), shifting its ids by `offset`.
  void set_induced(std::span<const Vertex> vertices, const EdgeColoring& part,
                   int offset = 0);
  void fill_unset(int color);

  bool is_set(Vertex u, Vertex v) const;
  EdgeColoring build() const;  // throws Error(Internal) if an edge is unset

 private:
  EdgeIndex index_;
  std::vector<int> colors_;
};

struct RainbowVerdict {
  bool rainbow_connected = true;
  std::optional<std::pair<Vertex, Vertex>> witness;  // first failing pair

  explicit operator bool() const noexcept { return rainbow_connected; }
};

/// Reachability over (vertex, used-colour-set) states. A colour id of -1 is
/// a wildcard edge: it carries no colour but still counts towards the walk
/// length. A pair counts as connected if some walk of length <= max_length
/// joins it with pairwise distinct colours on its coloured edges; with no
/// wildcards this is exactly rainbow connectivity. Buffers are reused across
/// calls, so one instance serves a whole search.
class RainbowReachability {
 public:
  static constexpr int kMaxPalette = 64;

  explicit RainbowReachability(const Graph& g);

  /// First pair (lexicographic) that is not connected, or nullopt.
  std::optional<std::pair<Vertex, Vertex>> first_disconnected_pair(
      std::span<const int> edge_colors, int palette, int max_length);

  const EdgeIndex& index() const noexcept { return index_; }

 private:
  bool search_from(Vertex source, std::span<const int> edge_colors, int palette,
                   int max_length);

  EdgeIndex index_;
  // dense (vertex, mask) stamps for small palettes, hash sets otherwise
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
  std::vector<std::unordered_set<std::uint64_t>> sparse_;
  std::vector<char> reached_;
  struct State {
    Vertex v;
    std::uint64_t mask;
    int length;
  };
  std::vector<State> queue_;
};

/// Throws Error(Coverage) when `col` does not colour exactly E(g) and
/// Error(NotConnected) when g is disconnected.
RainbowVerdict verify_rainbow_connected(const Graph& g, const EdgeColoring& col);

/// Combines rainbow colourings of the connected parts of a vertex partition
/// into a colouring of g with at most (k-1) + sum of part colours: parts keep
/// disjoint palettes, a spanning tree of the part quotient gets one fresh
/// colour per tree edge, other cross edges colour 0.
EdgeColoring compose_partition_coloring(const Graph& g,
                                        std::span<const VertexSet> parts,
                                        std::span<const EdgeColoring> part_colorings);

/// max(diameter, number of bridges) for a connected graph.
int lower_bounds(const Graph& g);

/// Coloring text: lines "u v k", '#' comments. Throws Error(Parse) on
/// malformed lines and Error(Coverage) unless exactly E(g) is covered.
EdgeColoring read_coloring(std::istream& in, const Graph& g);
void write_coloring(std::ostream& out, const EdgeColoring& col);

}  // namespace rainbow
