#pragma once

#include "pancover/graph.hpp"

namespace pancover {

/// Maximum-cardinality family of vertex-disjoint A-paths (both endpoints in
/// `a`, interior outside `a`), via the Gallai auxiliary-graph reduction to
/// maximum matching. Paths are returned as vertex sequences.
std::vector<std::vector<int>> max_apath_packing(const Graph& g, const VertexSet& a);

/// Size only (matching size minus |V \ A|); cheaper than extracting paths.
int max_apath_packing_size(const Graph& g, const VertexSet& a);

struct GallaiResult {
    bool is_packing;
    std::vector<std::vector<int>> paths;  // k disjoint A-paths when is_packing
    VertexSet cover;                      // otherwise: |cover| <= 2k-2, g - cover A-path-free
};

/// Gallai's theorem, constructive: k disjoint A-paths or a cover of size at
/// most 2k-2. Throws on internal extraction failure (must not happen).
GallaiResult gallai_apaths(const Graph& g, const VertexSet& a, int k);

/// True iff g - x has no A-path: every component of g - x contains at most
/// one surviving vertex of a.
bool apath_cover_valid(const Graph& g, const VertexSet& a, const VertexSet& x);

}  // namespace pancover
