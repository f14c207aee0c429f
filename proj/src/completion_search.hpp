#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "rainbow/coloring.hpp"

namespace rainbow::detail {

struct CompletionLimits {
  std::uint64_t max_nodes = 4'000'000;
};

/// Depth-first completion of a partial colouring. `fixed[i]` is the colour
/// of edge i (lexicographic order) or -1 when free. Free edges draw from
/// `fresh` new colours (interchangeable, so tried in first-use order) and,
/// when `reuse_fixed` is set, from the colours already present in `fixed`.
/// Prunes on repeated bridge colours and on pairs that cannot be joined even
/// with every free edge treated as a distinct colour. Returns nullopt on
/// exhaustion or when the node budget runs out.
std::optional<EdgeColoring> complete_coloring(const Graph& g, std::span<const int> fixed,
                                              int fresh, bool reuse_fixed,
                                              CompletionLimits limits = {});

}  // namespace rainbow::detail
