#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rainbow/coloring.hpp"
#include "rainbow/graph.hpp"

namespace rainbow {

// ---------------------------------------------------------------------------
// Complete multipartite graphs and closed forms

/// Parts of a complete multipartite graph, ordered by (size, first vertex).
/// The largest part is last.
struct MultipartiteShape {
  std::vector<VertexSet> parts;

  int part_count() const noexcept { return static_cast<int>(parts.size()); }
  std::vector<int> sizes() const;
  int small_side() const;  // total size of all but the last part
  int large_side() const;  // size of the last part
};

/// Shape of g iff its complement is a disjoint union of cliques.
std::optional<MultipartiteShape> recognize_complete_multipartite(const Graph& g);

/// Smallest r >= 1 with r^s >= t (t >= 1, s >= 1), without floating point.
int ceil_root(long long t, int s);

/// min{ceil(t^(1/s)), 4} for 2 <= s <= t.
int rc_complete_bipartite(int s, int t);

/// Rainbow connection number of the complete multipartite graph with the
/// given part sizes (any order, at least two parts).
int rc_complete_multipartite(std::span<const int> sizes);

/// Exact rc for complete graphs, trees, cycles and complete multipartite
/// graphs; nullopt otherwise. Throws Error(NotConnected).
std::optional<int> rc_closed_form(const Graph& g);

/// K_{sizes...} with parts on consecutive vertex blocks in the given order.
Graph complete_multipartite(std::span<const int> sizes);

/// Colouring of complete_multipartite({s, t}) with exactly
/// min{ceil(t^(1/s)), 4} colours. Requires 2 <= s <= t.
EdgeColoring color_complete_bipartite(int s, int t);

/// Rainbow colouring of a complete multipartite g with exactly
/// rc_complete_multipartite(shape sizes) colours.
EdgeColoring color_complete_multipartite(const MultipartiteShape& shape, const Graph& g);

/// Colouring with rc_closed_form(g) colours when a closed form applies.
std::optional<EdgeColoring> color_closed_form(const Graph& g);

// ---------------------------------------------------------------------------
// Certificates

enum class CaseLabel {
  THM31_CASE1,
  THM31_SUB21,
  THM31_SUB22,
  PROP32_TREE,
  PROP35_DISCONNECTED,
  THM41_P4,
  THM41_SUB11,
  THM41_SUB12,
  THM41_SUB13,
  THM41_SUB21,
  THM41_SUB22,
  THM41_SUB23,
  THM41_CASE3,
  PROP43_CASE1,
  PROP43_CASE2,
  PROP44_CASE1,
  PROP44_CASE2,
  CLOSED_FORM,
  SEARCH_FALLBACK,
  NO_BOUND,
};

std::string_view to_string(CaseLabel label);
std::optional<CaseLabel> case_label_from_string(std::string_view name);

/// Bound proved for a case, or nullopt for CLOSED_FORM / SEARCH_FALLBACK /
/// NO_BOUND whose bound depends on the instance.
std::optional<int> case_bound(CaseLabel label);

/// Which vertices and sets a construction relied on. Roles are named after
/// the proof they come from: `x` is the BFS root, `u`/`v`/`v1` special
/// vertices, `neighbors_of_u` the set V_u, `dominating_set` the set D.
struct CaseWitness {
  CaseLabel label = CaseLabel::NO_BOUND;
  std::optional<Vertex> root;
  std::vector<int> layer_sizes;
  std::optional<Vertex> u;
  std::optional<Vertex> v;
  std::optional<Vertex> v1;
  std::optional<VertexSet> neighbors_of_u;
  std::optional<VertexSet> dominating_set;
  std::optional<std::vector<int>> part_sizes;
  std::vector<int> pendant_layer_counts;  // NO_BOUND only
  std::optional<std::string> fallback;    // set when a bounded search produced the colouring
  std::string note;
};

struct BoundCertificate {
  Graph input_graph;
  Graph target_graph;
  CaseWitness witness;
  std::optional<int> claimed_bound;
  std::optional<EdgeColoring> coloring;
  bool verified = false;
  int lower_bound = 0;  // lower_bounds(target_graph)

  int colors_used() const { return coloring ? coloring->num_colors() : 0; }
};

// ---------------------------------------------------------------------------
// Colourings of complements. Each takes the graph G and colours its
// complement; preconditions are checked and violations throw
// Error(Precondition).

/// diam(G) >= 4 with connected complement: at most 4 colours.
BoundCertificate color_complement_of_diam_ge4(const Graph& g);

/// G a tree that is not a star: at most 3 colours.
BoundCertificate color_complement_of_tree(const Graph& g);

/// G with at least three components, or exactly two non-trivial ones.
BoundCertificate color_complement_of_disconnected(const Graph& g);

/// G connected, triangle-free, diam(G) = 3, complement connected.
BoundCertificate color_complement_diam3_trianglefree(const Graph& g);

/// G connected, triangle-free, diam(G) = 2, complement connected.
BoundCertificate color_complement_diam2_trianglefree(const Graph& g);

/// G triangle-free with exactly two components, one a single vertex.
BoundCertificate color_complement_trivial_plus_component(const Graph& g);

/// Extends a rainbow colouring of g[d_set] to g with at most three more
/// colours. d_set must be connected, dominating and contain every pendant
/// vertex of g.
EdgeColoring extend_via_dominating_set(const Graph& g, const VertexSet& d_set,
                                       const EdgeColoring& inner);

/// Upper-bound certificate for rc(g), dispatching on the shape of the
/// complement. Throws Error(NotConnected).
BoundCertificate rc_upper_bound_driver(const Graph& g);

}  // namespace rainbow
