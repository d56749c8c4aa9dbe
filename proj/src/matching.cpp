#include "pancover/matching.hpp"

#include <algorithm>
#include <queue>

namespace pancover {

namespace {

// Classic blossom-shrinking search for one augmenting path from `root`.
struct Blossom {
    const Graph& g;
    std::vector<int>& mate;
    std::vector<int> p, base;
    std::vector<char> used, blossom;

    Blossom(const Graph& g_, std::vector<int>& mate_)
        : g(g_), mate(mate_), p(g_.n()), base(g_.n()), used(g_.n()), blossom(g_.n()) {}

    int lca(int a, int b) {
        std::vector<char> seen(g.n(), 0);
        while (true) {
            a = base[a];
            seen[a] = 1;
            if (mate[a] == -1) break;
            a = p[mate[a]];
        }
        while (true) {
            b = base[b];
            if (seen[b]) return b;
            b = p[mate[b]];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base[v] != b) {
            blossom[base[v]] = 1;
            blossom[base[mate[v]]] = 1;
            p[v] = child;
            child = mate[v];
            v = p[mate[v]];
        }
    }

    int find_path(int root) {
        std::fill(used.begin(), used.end(), 0);
        std::fill(p.begin(), p.end(), -1);
        for (int i = 0; i < g.n(); ++i) base[i] = i;
        used[root] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : g.neighbors(v)) {
                if (base[v] == base[to] || mate[v] == to) continue;
                if (to == root || (mate[to] != -1 && p[mate[to]] != -1)) {
                    int curbase = lca(v, to);
                    std::fill(blossom.begin(), blossom.end(), 0);
                    mark_path(v, curbase, to);
                    mark_path(to, curbase, v);
                    for (int i = 0; i < g.n(); ++i)
                        if (blossom[base[i]]) {
                            base[i] = curbase;
                            if (!used[i]) {
                                used[i] = 1;
                                q.push(i);
                            }
                        }
                } else if (p[to] == -1) {
                    p[to] = v;
                    if (mate[to] == -1) return to;
                    used[mate[to]] = 1;
                    q.push(mate[to]);
                }
            }
        }
        return -1;
    }
};

}  // namespace

std::vector<int> max_matching_from(const Graph& g, std::vector<int> mate) {
    Blossom bl(g, mate);
    for (int v = 0; v < g.n(); ++v) {
        if (mate[v] != -1) continue;
        int u = bl.find_path(v);
        while (u != -1) {  // flip along the found path
            int pv = bl.p[u], ppv = mate[pv];
            mate[u] = pv;
            mate[pv] = u;
            u = ppv;
        }
    }
    return mate;
}

std::vector<int> max_matching(const Graph& g) {
    std::vector<int> mate(g.n(), -1);
    // greedy seed
    for (int v = 0; v < g.n(); ++v) {
        if (mate[v] != -1) continue;
        for (int w : g.neighbors(v))
            if (mate[w] == -1) {
                mate[v] = w;
                mate[w] = v;
                break;
            }
    }
    return max_matching_from(g, std::move(mate));
}

int matching_size(const std::vector<int>& mate) {
    int c = 0;
    for (size_t v = 0; v < mate.size(); ++v)
        if (mate[v] >= 0 && (int)v < mate[v]) ++c;
    return c;
}

}  // namespace pancover
