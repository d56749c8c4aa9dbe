#pragma once

#include "pancover/graph.hpp"

namespace pancover {

/// Maximum matching in a general graph (augmenting paths with blossom
/// shrinking). Returns mate[v] (-1 when unmatched). Deterministic scan order.
std::vector<int> max_matching(const Graph& g);

/// As max_matching, but starts augmenting from a given valid matching.
std::vector<int> max_matching_from(const Graph& g, std::vector<int> mate);

int matching_size(const std::vector<int>& mate);

}  // namespace pancover
