#pragma once

#include "pancover/certificate.hpp"
#include "pancover/tutte.hpp"

namespace pancover {

struct DiamondStageResult {
    bool is_packing;
    std::vector<Model> models;  // k disjoint diamond models when packing
    VertexSet cover;
};

/// Either k disjoint induced diamond subdivisions or a vertex set hitting all
/// induced diamond subdivisions that intersect the induced path p. Four
/// stages: Q-claws, single cycle-bridges, edge-sharing bridge pairs, and a
/// two-vertex window sweep with a final completeness re-scan.
DiamondStageResult cover_or_pack_on_path(const Graph& g, const std::vector<int>& p, int k,
                                         const ThresholdPolicy& policy);

/// Given a diamond model h with g - V(h) diamond-subdivision-free: either k
/// disjoint models or a cover of size <= g1(k) hitting every induced diamond
/// subdivision of g (union of the three per-path covers).
DiamondStageResult cover_or_pack_given_model(const Graph& g, const Model& h, int k,
                                             const ThresholdPolicy& policy);

/// End-to-end packing/covering of induced diamond subdivisions.
Certificate solve_diamond(const Graph& g, int k, const ThresholdPolicy& policy = {});

}  // namespace pancover
