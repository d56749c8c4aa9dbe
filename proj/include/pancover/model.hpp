#pragma once

#include "pancover/pattern.hpp"

namespace pancover {

/// Witness that a host graph contains an induced subdivision of a pattern:
/// branch vertices plus one induced host path per pattern edge. Paths are
/// indexed by the pattern's edges() order and run from phi(u) to phi(v), u < v.
struct Model {
    std::vector<int> branch;
    std::vector<std::vector<int>> edge_paths;

    VertexSet vertex_set() const;
};

struct VerifyResult {
    bool ok;
    std::string reason;
    explicit operator bool() const { return ok; }
};

/// Checks all model conditions in the host graph.
VerifyResult verify_model(const Graph& g, const Pattern& h, const Model& m);

/// Induced subdivision of the p-pan: the pendant tail
/// (tail[0] is the degree-1 end) and the cycle, attached at cycle[0].
struct PanSubdivision {
    std::vector<int> tail;
    std::vector<int> cycle;

    int order() const { return (int)(tail.size() + cycle.size()); }
    VertexSet vertex_set() const { return vset_sorted([&] {
            std::vector<int> v(tail);
            v.insert(v.end(), cycle.begin(), cycle.end());
            return v;
        }()); }
    Model to_model() const;
};

/// Diamond model from a theta: three internally disjoint x-y paths (each given
/// from x to y), at most one of length one.
Model diamond_model_from_paths(const std::vector<int>& p1, const std::vector<int>& p2,
                               const std::vector<int>& p3);

// Exact-shape tests on a whole graph (used to validate certificate groups):
// connected with the degree sequence and structure of a subdivision.
bool is_pan_subdivision_graph(const Graph& g, int p);
bool is_diamond_subdivision_graph(const Graph& g);

/// The three branch-to-branch paths of a diamond-subdivision-shaped graph.
std::vector<std::vector<int>> theta_paths(const Graph& g);

}  // namespace pancover
