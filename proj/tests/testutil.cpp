#include "testutil.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <queue>
#include <set>

namespace pancover::testutil {

Graph from_edges(int n, const std::vector<std::pair<int, int>>& es) {
    Graph g(n);
    for (auto [u, v] : es) g.add_edge(u, v);
    return g;
}

Graph random_graph(int n, double p, std::mt19937& rng) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng) < p) es.push_back({i, j});
    return Graph::from_edges(n, std::move(es));
}

MultiGraph random_cubic_multigraph(int n, std::mt19937& rng) {
    if ((3 * n) % 2 != 0) throw std::invalid_argument("need 3n even");
    std::vector<int> stubs;
    for (int v = 0; v < n; ++v)
        for (int t = 0; t < 3; ++t) stubs.push_back(v);
    std::shuffle(stubs.begin(), stubs.end(), rng);
    MultiGraph m(n);
    for (size_t i = 0; i < stubs.size(); i += 2) m.add_edge(stubs[i], stubs[i + 1]);
    return m;
}

namespace {

struct CanonSearch {
    const Graph& g;
    int n, total;
    uint64_t best = ~uint64_t(0);
    std::vector<int> perm;
    std::vector<char> used;

    explicit CanonSearch(const Graph& g_)
        : g(g_), n(g_.n()), total(g_.n() * (g_.n() - 1) / 2), perm(g_.n()), used(g_.n(), 0) {}

    void rec(int k, uint64_t bits, int pairs_done) {
        if (k == n) {
            best = std::min(best, bits);
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            uint64_t nb = bits;
            for (int i = 0; i < k; ++i)
                if (g.has_edge(perm[i], v)) nb |= uint64_t(1) << (total - 1 - (pairs_done + i));
            int np = pairs_done + k;
            if (best != ~uint64_t(0)) {
                // earlier pairs occupy higher bits, so prefix comparison is sound
                uint64_t mask = np == 0 ? 0 : (~uint64_t(0) << (total - np));
                if ((nb & mask) > (best & mask)) continue;
            }
            used[v] = 1;
            perm[k] = v;
            rec(k + 1, nb, np);
            used[v] = 0;
        }
    }
};

}  // namespace

uint64_t canonical_form(const Graph& g) {
    if (g.n() > 11) throw std::invalid_argument("canonical_form: graph too large");
    if (g.n() <= 1) return 0;
    CanonSearch cs(g);
    cs.rec(0, 0, 0);
    return cs.best | (uint64_t(g.n()) << 58);  // size tag keeps different orders distinct
}

const std::vector<Graph>& all_graphs(int n) {
    static std::map<int, std::vector<Graph>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<Graph> out;
    if (n <= 1) {
        out.push_back(Graph(std::max(n, 0)));
    } else {
        const auto& prev = all_graphs(n - 1);
        std::set<uint64_t> seen;
        for (const Graph& base : prev) {
            for (uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
                Graph h(n);
                for (auto [u, v] : base.edges()) h.add_edge(u, v);
                for (int v = 0; v < n - 1; ++v)
                    if (mask >> v & 1) h.add_edge(v, n - 1);
                uint64_t c = canonical_form(h);
                if (seen.insert(c).second) out.push_back(std::move(h));
            }
        }
    }
    return cache.emplace(n, std::move(out)).first->second;
}

std::vector<Graph> all_connected_graphs(int n) {
    std::vector<Graph> out;
    for (const Graph& g : all_graphs(n))
        if (is_connected(g)) out.push_back(g);
    return out;
}

std::vector<Graph> all_trees(int n) {
    if (n <= 1) return {Graph(std::max(n, 0))};
    std::vector<Graph> out;
    std::set<uint64_t> seen;
    for (const Graph& base : all_trees(n - 1)) {
        for (int v = 0; v < n - 1; ++v) {
            Graph h(n);
            for (auto [a, b] : base.edges()) h.add_edge(a, b);
            h.add_edge(v, n - 1);
            uint64_t c = canonical_form(h);
            if (seen.insert(c).second) out.push_back(std::move(h));
        }
    }
    return out;
}

int brute_max_matching(const Graph& g) {
    auto es = g.edges();
    std::function<int(size_t, uint32_t)> rec = [&](size_t i, uint32_t used) -> int {
        if (i == es.size()) return 0;
        int best = rec(i + 1, used);
        auto [u, v] = es[i];
        if (!(used >> u & 1) && !(used >> v & 1))
            best = std::max(best, 1 + rec(i + 1, used | (1u << u) | (1u << v)));
        return best;
    };
    return rec(0, 0);
}

bool is_pan_subdiv_set(const Graph& g, const VertexSet& s, int p) {
    if ((int)s.size() < p + 3) return false;
    auto sub = induced_subgraph(g, s);
    const Graph& h = sub.graph;
    if (!is_connected(h)) return false;
    if (h.edge_count() != h.n()) return false;  // exactly one cycle
    int d1 = -1, d3 = -1;
    for (int v = 0; v < h.n(); ++v) {
        if (h.degree(v) == 1) {
            if (d1 >= 0) return false;
            d1 = v;
        } else if (h.degree(v) == 3) {
            if (d3 >= 0) return false;
            d3 = v;
        } else if (h.degree(v) != 2) {
            return false;
        }
    }
    if (d1 < 0 || d3 < 0) return false;
    int len = 0, prev = -1, cur = d1;
    while (cur != d3) {
        int nxt = -1;
        for (int w : h.neighbors(cur))
            if (w != prev) nxt = w;
        prev = cur;
        cur = nxt;
        ++len;
    }
    return len >= p;
}

int brute_min_pan_order(const Graph& g, int p) {
    int best = -1;
    for (uint32_t mask = 0; mask < (1u << g.n()); ++mask) {
        int sz = __builtin_popcount(mask);
        if (sz < p + 3) continue;
        if (best >= 0 && sz >= best) continue;
        VertexSet s;
        for (int v = 0; v < g.n(); ++v)
            if (mask >> v & 1) s.push_back(v);
        if (is_pan_subdiv_set(g, s, p)) best = sz;
    }
    return best;
}

std::vector<VertexSet> all_apath_sets(const Graph& g, const VertexSet& a) {
    std::vector<VertexSet> out;
    std::set<VertexSet> seen;
    std::vector<int> path;
    std::vector<char> used(g.n(), 0);
    std::function<void()> extend = [&]() {
        int tip = path.back();
        for (int w : g.neighbors(tip)) {
            if (used[w]) continue;
            if (vset_contains(a, w)) {
                if (w != path.front()) {
                    path.push_back(w);
                    VertexSet s = vset_sorted(path);
                    if (seen.insert(s).second) out.push_back(s);
                    path.pop_back();
                }
                continue;
            }
            used[w] = 1;
            path.push_back(w);
            extend();
            path.pop_back();
            used[w] = 0;
        }
    };
    for (int s : a) {
        path = {s};
        used[s] = 1;
        extend();
        used[s] = 0;
    }
    return out;
}

int max_disjoint_sets(const std::vector<VertexSet>& family, int n) {
    std::vector<std::vector<size_t>> at_min(n);
    for (size_t i = 0; i < family.size(); ++i) at_min[family[i].front()].push_back(i);
    std::vector<char> used(n, 0);
    std::function<int(int)> rec = [&](int v) -> int {
        if (v == n) return 0;
        if (used[v]) return rec(v + 1);
        int best = rec(v + 1);
        for (size_t i : at_min[v]) {
            bool free = true;
            for (int x : family[i])
                if (used[x]) {
                    free = false;
                    break;
                }
            if (!free) continue;
            for (int x : family[i]) used[x] = 1;
            best = std::max(best, 1 + rec(v + 1));
            for (int x : family[i]) used[x] = 0;
        }
        return best;
    };
    return rec(0);
}

int brute_max_apaths(const Graph& g, const VertexSet& a) {
    return max_disjoint_sets(all_apath_sets(g, a), g.n());
}

bool brute_has_aclaw(const Graph& g, const VertexSet& a) {
    // all (v, a)-path masks from each candidate center, then search for 3
    // meeting pairwise only at the center
    for (int v = 0; v < g.n(); ++v) {
        if (vset_contains(a, v) || g.degree(v) < 3) continue;
        std::set<uint32_t> legset;  // vertex masks excluding the center
        std::vector<int> path;
        std::vector<char> used(g.n(), 0);
        uint32_t mask = 0;
        std::function<void()> extend = [&]() {
            int tip = path.back();
            for (int w : g.neighbors(tip)) {
                if (used[w]) continue;
                if (vset_contains(a, w)) {
                    legset.insert(mask | (1u << w));
                    continue;
                }
                used[w] = 1;
                path.push_back(w);
                mask |= 1u << w;
                extend();
                mask &= ~(1u << w);
                path.pop_back();
                used[w] = 0;
            }
        };
        path = {v};
        used[v] = 1;
        extend();
        std::vector<uint32_t> legs(legset.begin(), legset.end());
        for (size_t i = 0; i < legs.size(); ++i)
            for (size_t j = i + 1; j < legs.size(); ++j) {
                if (legs[i] & legs[j]) continue;
                for (size_t k = j + 1; k < legs.size(); ++k)
                    if (!(legs[i] & legs[k]) && !(legs[j] & legs[k])) return true;
            }
    }
    return false;
}

int brute_girth(const Graph& g) {
    int best = -1;
    for (auto [u, v] : g.edges()) {
        Graph h = remove_edges(g, {{u, v}});
        auto dist = bfs_dist(h, u);
        if (dist[v] >= 0 && (best < 0 || dist[v] + 1 < best)) best = dist[v] + 1;
    }
    return best;
}

long long count_cycles(const Graph& g) {
    long long count = 0;
    std::vector<int> path;
    std::vector<char> used(g.n(), 0);
    std::function<void(int)> extend = [&](int root) {
        int tip = path.back();
        for (int w : g.neighbors(tip)) {
            if (w == root && path.size() >= 3) ++count;
            if (w <= root || used[w]) continue;
            used[w] = 1;
            path.push_back(w);
            extend(root);
            path.pop_back();
            used[w] = 0;
        }
    };
    for (int s = 0; s < g.n(); ++s) {
        path = {s};
        used[s] = 1;
        extend(s);
        used[s] = 0;
    }
    return count / 2;  // each cycle traced in both directions
}

}  // namespace pancover::testutil
