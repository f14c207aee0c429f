#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace rainbow {

using Vertex = int;
using VertexSet = std::vector<Vertex>;  // sorted ascending, no duplicates

struct Edge {
  Vertex u;
  Vertex v;  // u < v

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Undirected simple graph on vertices 0..n-1 stored as symmetric adjacency
/// bit rows. Values are immutable after construction.
class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(int n);

  /// Throws Error(InvalidArgument) on loops or out-of-range endpoints.
  /// Repeated edges collapse.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<std::pair<int, int>> edges);

  int order() const noexcept { return n_; }
  int size() const noexcept { return m_; }

  bool adjacent(Vertex u, Vertex v) const noexcept {
    return (row(u)[v >> 6] >> (v & 63)) & 1u;
  }
  int degree(Vertex v) const noexcept;
  VertexSet neighbors(Vertex v) const;
  std::span<const std::uint64_t> row(Vertex v) const noexcept {
    return {bits_.data() + static_cast<std::size_t>(v) * words_, words_};
  }
  int words_per_row() const noexcept { return static_cast<int>(words_); }

  /// Edges in lexicographic (u<v) order.
  std::vector<Edge> edges() const;

  Graph with_edge(Vertex u, Vertex v) const;
  Graph without_edge(Vertex u, Vertex v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void set_bit(Vertex u, Vertex v, bool on);

  int n_ = 0;
  int m_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;

  friend Graph complement(const Graph& g);
};

Graph complement(const Graph& g);

/// Subgraph induced by `vertices`; vertex i of the result is vertices[i].
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Connected components, each sorted, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);

bool is_complete(const Graph& g);
bool is_tree(const Graph& g);

/// Distances from `source`; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

/// Eccentricity of v in a connected graph.
int eccentricity(const Graph& g, Vertex v);

/// Diameter, or std::nullopt when disconnected (the "infinite" value).
std::optional<int> diameter(const Graph& g);

/// Smallest-index vertex of maximum eccentricity. Requires a connected graph.
Vertex select_root(const Graph& g);

struct LayerDecomposition {
  Vertex root = 0;
  std::vector<VertexSet> layers;  // layers[i] = vertices at distance i
  int depth = 0;                  // eccentricity of root
  VertexSet even_class;           // union of even layers
  VertexSet odd_class;            // union of odd layers
  int even_parts = 0;             // ceil((depth+1)/2)
  int odd_parts = 0;              // ceil(depth/2)

  std::vector<int> sizes() const;
};

/// Throws Error(NotConnected) when g is disconnected.
LayerDecomposition bfs_layers(const Graph& g, Vertex root);

bool contains(const VertexSet& set, Vertex v);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);

}  // namespace rainbow
