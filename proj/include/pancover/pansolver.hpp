#pragma once

#include "pancover/certificate.hpp"
#include "pancover/minpan.hpp"
#include "pancover/policy.hpp"

namespace pancover {

/// Vertices outside c adjacent to every vertex of c.
VertexSet cycle_dominators(const Graph& g, const std::vector<int>& c);

/// k disjoint induced 1-pan subdivisions from a minimum pan (u, C) with
/// |C| >= 5 and at least apaths1(k) disjoint V(C)-paths of g - E(C).
std::vector<PanSubdivision> pack_pan1_from_apaths(const Graph& g, const PanSubdivision& h,
                                                  const std::vector<std::vector<int>>& paths,
                                                  int k, const ThresholdPolicy& policy);

/// 2-pan counterpart: |C| >= 11, paths avoid E(C) and the C-dominators.
std::vector<PanSubdivision> pack_pan2_from_apaths(const Graph& g, const PanSubdivision& h,
                                                  const std::vector<std::vector<int>>& paths,
                                                  int k, const ThresholdPolicy& policy);

/// End-to-end packing/covering for induced p-pan subdivisions (p in {1, 2}).
Certificate solve_pan(const Graph& g, int p, int k, const ThresholdPolicy& policy = {});

inline Certificate solve_pan1(const Graph& g, int k, const ThresholdPolicy& policy = {}) {
    return solve_pan(g, 1, k, policy);
}
inline Certificate solve_pan2(const Graph& g, int k, const ThresholdPolicy& policy = {}) {
    return solve_pan(g, 2, k, policy);
}

}  // namespace pancover
