#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>

#include "rainbow/graph.hpp"

namespace rainbow {

struct SearchConfig {
  int max_edges = 16;
  std::optional<double> time_budget;  // seconds of wall clock
  bool parallel = false;
};

enum class Decision { No, Yes, Unknown };

/// Whether some colouring of E(g) with at most k colours rainbow connects g.
/// Exhaustive over canonical colourings (edge i, in lexicographic order, may
/// use colours up to one more than the largest used so far). Unknown only
/// when the time budget runs out. Throws Error(ResourceLimit) when
/// |E| > cfg.max_edges and Error(NotConnected).
Decision is_rainbow_connectable(const Graph& g, int k, const SearchConfig& cfg = {});

struct ExactResult {
  std::optional<int> value;  // rc(g), unless the budget ran out
  int low = 0;               // rc(g) >= low
  int high = 0;              // rc(g) <= high
  int lower_bound = 0;       // lower_bounds(g), where the search started

  bool known() const noexcept { return value.has_value(); }
};

/// Smallest k accepted by is_rainbow_connectable, scanning upward from
/// lower_bounds(g). A single vertex has rc 0.
ExactResult exact_rc(const Graph& g, const SearchConfig& cfg = {});

// ---------------------------------------------------------------------------
// Small graphs

inline constexpr int kMaxEnumerationOrder = 7;

/// Graph whose i-th lexicographic vertex pair is an edge iff bit i of mask
/// is set.
Graph graph_from_mask(int n, std::uint64_t mask);

/// Calls sink on every labelled graph on n vertices that passes filter, in
/// mask order. Throws Error(InvalidArgument) for n > kMaxEnumerationOrder.
void enumerate_graphs(int n, const std::function<bool(const Graph&)>& filter,
                      const std::function<void(const Graph&)>& sink);

/// Seeded G(n, p) sampler for orders beyond exhaustive enumeration.
class GraphSampler {
 public:
  explicit GraphSampler(std::uint64_t seed) : rng_(seed) {}

  Graph gnp(int n, double p);
  /// Uniform labelled tree via a random Pruefer sequence (n >= 2).
  Graph tree(int n);
  std::mt19937_64& engine() noexcept { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace rainbow
