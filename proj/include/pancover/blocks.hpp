#pragma once

#include "pancover/graph.hpp"

namespace pancover {

/// Block-cut decomposition. Blocks are maximal 2-connected subgraphs and
/// bridge edges; every edge lies in exactly one block. Isolated vertices
/// belong to no block.
struct BlockCutTree {
    std::vector<VertexSet> blocks;
    VertexSet cut_vertices;
    // Tree edges between block index and cut vertex.
    std::vector<std::pair<int, int>> tree_edges;

    bool is_cut(int v) const { return vset_contains(cut_vertices, v); }
    /// Index of some block containing v (-1 if v is isolated).
    int block_of(int v) const;
    /// Blocks along the unique tree path from a block containing u to one
    /// containing v (empty when u, v are in different components).
    std::vector<int> block_path(int u, int v) const;
};

BlockCutTree blocks(const Graph& g);

}  // namespace pancover
