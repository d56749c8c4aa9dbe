#pragma once

#include "pancover/multigraph.hpp"
#include "pancover/policy.hpp"

namespace pancover {

/// k vertex-disjoint cycles of `m` (each a distinct-vertex cyclic sequence; a
/// single vertex stands for a loop), found by repeatedly peeling a shortest
/// cycle from the min-degree-3 core. Throws PreconditionError("insufficient
/// graph") when the core starts below simonovits(k) vertices or peeling stalls.
std::vector<std::vector<int>> simonovits_pack(const MultiGraph& m, int k,
                                              const ThresholdPolicy& policy);

}  // namespace pancover
