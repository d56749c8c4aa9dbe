#pragma once

#include "pancover/graph.hpp"

namespace pancover {

/// Up to `want` internally vertex-disjoint paths from `src` into `targets`
/// (distinct target per path), via unit-vertex-capacity max flow. Targets are
/// absorbing: every path ends at the first target it meets and contains no
/// other target. Returns the paths found (size < want when no more exist).
std::vector<std::vector<int>> vertex_disjoint_paths(const Graph& g, int src,
                                                    const VertexSet& targets, int want);

}  // namespace pancover
