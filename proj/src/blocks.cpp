#include "pancover/blocks.hpp"

#include <algorithm>
#include <queue>

namespace pancover {

namespace {

struct BlockState {
    const Graph& g;
    std::vector<int> num, low;
    std::vector<std::pair<int, int>> stack;
    std::vector<VertexSet> blocks;
    std::vector<char> cut;
    int timer = 0;

    explicit BlockState(const Graph& g_) : g(g_), num(g_.n(), -1), low(g_.n()), cut(g_.n(), 0) {}

    void pop_block(int u, int v) {
        std::vector<int> verts;
        while (true) {
            auto [a, b] = stack.back();
            stack.pop_back();
            verts.push_back(a);
            verts.push_back(b);
            if (a == u && b == v) break;
        }
        blocks.push_back(vset_sorted(std::move(verts)));
    }

    // Iterative DFS; recursion depth can reach |V| on generated graphs.
    void run(int root) {
        struct Frame {
            int v;
            int parent;
            size_t i;
            bool skipped_parent;
        };
        std::vector<Frame> st;
        num[root] = low[root] = timer++;
        st.push_back({root, -1, 0, true});
        int root_children = 0;
        while (!st.empty()) {
            Frame& f = st.back();
            int v = f.v;
            if (f.i < g.neighbors(v).size()) {
                int w = g.neighbors(v)[f.i++];
                if (w == f.parent && !f.skipped_parent) {
                    f.skipped_parent = true;  // simple graph: the tree edge occurs once
                    continue;
                }
                if (num[w] < 0) {
                    num[w] = low[w] = timer++;
                    stack.push_back({v, w});
                    if (v == root) ++root_children;
                    st.push_back({w, v, 0, false});
                } else if (num[w] < num[v]) {
                    stack.push_back({v, w});
                    low[v] = std::min(low[v], num[w]);
                }
            } else {
                st.pop_back();
                if (!st.empty()) {
                    int p = st.back().v;
                    low[p] = std::min(low[p], low[v]);
                    if (low[v] >= num[p]) {
                        pop_block(p, v);
                        if (p != root) cut[p] = 1;
                    }
                }
            }
        }
        if (root_children > 1) cut[root] = 1;
    }
};

}  // namespace

BlockCutTree blocks(const Graph& g) {
    BlockState s(g);
    for (int v = 0; v < g.n(); ++v)
        if (s.num[v] < 0 && g.degree(v) > 0) s.run(v);

    BlockCutTree t;
    t.blocks = std::move(s.blocks);
    for (int v = 0; v < g.n(); ++v)
        if (s.cut[v]) t.cut_vertices.push_back(v);
    for (size_t b = 0; b < t.blocks.size(); ++b)
        for (int v : t.blocks[b])
            if (s.cut[v]) t.tree_edges.push_back({(int)b, v});
    return t;
}

int BlockCutTree::block_of(int v) const {
    for (size_t b = 0; b < blocks.size(); ++b)
        if (vset_contains(blocks[b], v)) return (int)b;
    return -1;
}

std::vector<int> BlockCutTree::block_path(int u, int v) const {
    int B = (int)blocks.size();
    auto cut_node = [&](int c) {
        return B + (int)(std::lower_bound(cut_vertices.begin(), cut_vertices.end(), c) - cut_vertices.begin());
    };
    int N = B + (int)cut_vertices.size();
    std::vector<std::vector<int>> adj(N);
    for (auto [b, c] : tree_edges) {
        adj[b].push_back(cut_node(c));
        adj[cut_node(c)].push_back(b);
    }
    int su = is_cut(u) ? cut_node(u) : block_of(u);
    int sv = is_cut(v) ? cut_node(v) : block_of(v);
    if (su < 0 || sv < 0) return {};
    std::vector<int> par(N, -2);
    std::queue<int> q;
    par[su] = -1;
    q.push(su);
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        if (x == sv) break;
        for (int y : adj[x])
            if (par[y] == -2) {
                par[y] = x;
                q.push(y);
            }
    }
    if (par[sv] == -2) return {};
    std::vector<int> nodes;
    for (int x = sv; x != -1; x = par[x]) nodes.push_back(x);
    std::reverse(nodes.begin(), nodes.end());
    std::vector<int> out;
    for (int x : nodes)
        if (x < B) out.push_back(x);
    return out;
}

}  // namespace pancover
