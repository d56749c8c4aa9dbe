#pragma once

#include "pancover/graph.hpp"

namespace pancover {

/// Undirected multigraph: loops and parallel edges allowed.
/// A loop counts 2 toward the degree of its vertex.
struct MultiGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    MultiGraph() = default;
    explicit MultiGraph(int n_) : n(n_) {}
    static MultiGraph from_graph(const Graph& g);

    void add_edge(int u, int v);
    int degree(int v) const;
    std::vector<std::vector<int>> incidence() const;  // per vertex, edge ids (loops listed twice)
};

/// Cycle in a multigraph: verts[i] -- verts[i+1] via edge ids[i], closing back
/// to verts[0]. A loop is length 1 (one vertex, one edge), a parallel pair
/// length 2.
struct MultiCycle {
    std::vector<int> verts;
    std::vector<int> edge_ids;
    int length() const { return (int)edge_ids.size(); }
};

/// Result of iterated degree-<=1 deletion and degree-2 suppression.
/// Every core edge remembers the path of original vertices it stands for,
/// so core cycles lift back to cycles of the input multigraph.
struct CoreResult {
    MultiGraph core;
    std::vector<int> to_orig;                 // core vertex -> original vertex
    std::vector<std::vector<int>> edge_path;  // core edge -> original vertex walk (endpoints included)

    /// Original-vertex sequence of a lifted cycle (distinct vertices, cyclic order).
    std::vector<int> lift_cycle(const MultiCycle& c) const;
};

CoreResult cubic_core(const MultiGraph& m);

/// Minimum-length cycle, or nullopt when the multigraph is a forest.
std::optional<MultiCycle> shortest_cycle(const MultiGraph& m);

}  // namespace pancover
