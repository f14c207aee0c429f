#pragma once

#include <optional>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

/// Cut edges of g in lexicographic order.
std::vector<Edge> bridges(const Graph& g);

bool is_triangle_free(const Graph& g);

/// True iff no vertex has three pairwise non-adjacent neighbours.
bool is_claw_free(const Graph& g);

struct AnalysisReport {
  int order = 0;
  int size = 0;
  bool connected = false;
  std::vector<int> component_sizes;
  std::optional<int> diameter;  // nullopt when disconnected
  bool triangle_free = false;
  bool claw_free = false;
  std::vector<Edge> bridges;
  int min_degree = 0;
  // Layer sizes and, per layer, the count of vertices whose complement degree
  // is 1, for the root chosen by select_root. Empty when disconnected.
  std::optional<Vertex> root;
  std::vector<int> layer_sizes;
  std::vector<int> pendant_layer_counts;
  int high_degree_count = 0;  // vertices of degree n-2
};

AnalysisReport analyze(const Graph& g);

}  // namespace rainbow
