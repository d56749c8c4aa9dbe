#pragma once

#include "pancover/graph.hpp"

namespace pancover {

/// Center vertex outside A with three paths to A, pairwise meeting only at
/// the center; each leg runs from the center to its A-endpoint and contains
/// no other A-vertex.
struct AClaw {
    int center;
    std::vector<std::vector<int>> legs;

    VertexSet vertex_set() const;
    std::vector<int> leaves() const;
};

bool verify_aclaw(const Graph& g, const VertexSet& a, const AClaw& c);

/// Smallest-center A-claw, via three vertex-disjoint (v,A)-paths by flow.
std::optional<AClaw> find_aclaw(const Graph& g, const VertexSet& a);

/// k pairwise disjoint L-claws in a forest of maximum degree 3 whose every
/// component has a degree-3 vertex; L is the leaf set and must have >= 6k
/// elements. Rooted peeling of deepest branch vertices.
std::vector<AClaw> claws_from_leafy_forest(const Graph& f, int k);

struct AClawEpResult {
    bool is_packing;
    std::vector<AClaw> claws;  // k disjoint claws when is_packing
    VertexSet cover;           // otherwise: |cover| <= 14k, g - cover A-claw-free
    VertexSet terminal_s;      // the loop's final S; always leaves g - S A-claw-free
};

/// Packing/covering for A-claws: either k disjoint A-claws or a hitting set
/// of size at most 14k.
AClawEpResult aclaw_ep(const Graph& g, const VertexSet& a, int k);

}  // namespace pancover
