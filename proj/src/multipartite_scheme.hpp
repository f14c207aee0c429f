#pragma once

#include <vector>

#include "rainbow/coloring.hpp"

namespace rainbow::detail {

/// Writes a rainbow colouring of the complete multipartite graph on `parts`
/// into `builder` (every cross pair must be an edge of the builder's target;
/// edges inside parts are left untouched). Uses colour ids 0..r-1 where r is
/// the rainbow connection number of that multipartite graph, and returns r.
int apply_multipartite_scheme(ColoringBuilder& builder, std::vector<VertexSet> parts);

}  // namespace rainbow::detail
