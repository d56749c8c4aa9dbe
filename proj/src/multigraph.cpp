#include "pancover/multigraph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <queue>

namespace pancover {

MultiGraph MultiGraph::from_graph(const Graph& g) {
    MultiGraph m(g.n());
    m.edges = g.edges();
    return m;
}

void MultiGraph::add_edge(int u, int v) {
    if (u < 0 || u >= n || v < 0 || v >= n) throw std::out_of_range("vertex out of range");
    edges.push_back({u, v});
}

int MultiGraph::degree(int v) const {
    int d = 0;
    for (auto [a, b] : edges) {
        if (a == v) ++d;
        if (b == v) ++d;
    }
    return d;
}

std::vector<std::vector<int>> MultiGraph::incidence() const {
    std::vector<std::vector<int>> inc(n);
    for (size_t e = 0; e < edges.size(); ++e) {
        inc[edges[e].first].push_back((int)e);
        inc[edges[e].second].push_back((int)e);
    }
    return inc;
}

namespace {

// Mutable multigraph with per-edge original-vertex walks.
struct CoreBuilder {
    struct Edge {
        int u, v;
        std::vector<int> walk;  // from u to v in original ids; loops: closed walk
        bool alive = true;
    };
    int n;
    std::vector<Edge> es;
    std::vector<std::vector<int>> inc;  // edge ids per vertex (stale entries possible)
    std::vector<int> deg;
    std::vector<char> dead;

    explicit CoreBuilder(const MultiGraph& m) : n(m.n), inc(m.n), deg(m.n, 0), dead(m.n, 0) {
        for (auto [u, v] : m.edges) add_edge(u, v, {u, v});
    }

    int add_edge(int u, int v, std::vector<int> walk) {
        int id = (int)es.size();
        es.push_back({u, v, std::move(walk), true});
        inc[u].push_back(id);
        if (u == v) {
            deg[u] += 2;
        } else {
            inc[v].push_back(id);
            deg[u]++;
            deg[v]++;
        }
        return id;
    }

    std::vector<int> live_edges_at(int v) {
        auto& lst = inc[v];
        lst.erase(std::remove_if(lst.begin(), lst.end(), [&](int e) { return !es[e].alive; }), lst.end());
        return lst;
    }

    void kill_edge(int e) {
        es[e].alive = false;
        if (es[e].u == es[e].v) {
            deg[es[e].u] -= 2;
        } else {
            deg[es[e].u] -= 1;
            deg[es[e].v] -= 1;
        }
    }

    std::vector<int> oriented_walk(int e, int from) {
        std::vector<int> w = es[e].walk;
        if (es[e].u == from) return w;
        std::reverse(w.begin(), w.end());
        return w;
    }

    void reduce() {
        std::deque<int> work;
        for (int v = 0; v < n; ++v) work.push_back(v);
        while (!work.empty()) {
            int v = work.front();
            work.pop_front();
            if (dead[v] || deg[v] >= 3) continue;
            auto le = live_edges_at(v);
            if (deg[v] <= 1) {
                for (int e : le) {
                    int other = es[e].u == v ? es[e].v : es[e].u;
                    kill_edge(e);
                    if (other != v) work.push_back(other);
                }
                dead[v] = 1;
                continue;
            }
            // degree 2: either one loop, or two distinct non-loop edges
            if (le.size() == 1) {  // single loop
                kill_edge(le[0]);
                dead[v] = 1;
                continue;
            }
            int e1 = le[0], e2 = le[1];
            int a = es[e1].u == v ? es[e1].v : es[e1].u;
            int b = es[e2].u == v ? es[e2].v : es[e2].u;
            std::vector<int> w1 = oriented_walk(e1, a);     // a .. v
            std::vector<int> w2 = oriented_walk(e2, v);     // v .. b
            w1.insert(w1.end(), w2.begin() + 1, w2.end());  // a .. v .. b
            kill_edge(e1);
            kill_edge(e2);
            dead[v] = 1;
            add_edge(a, b, std::move(w1));
            work.push_back(a);
            if (b != a) work.push_back(b);
        }
    }
};

}  // namespace

CoreResult cubic_core(const MultiGraph& m) {
    CoreBuilder cb(m);
    cb.reduce();

    CoreResult out;
    std::vector<int> newid(m.n, -1);
    for (int v = 0; v < m.n; ++v)
        if (!cb.dead[v] && cb.deg[v] > 0) {
            newid[v] = (int)out.to_orig.size();
            out.to_orig.push_back(v);
        }
    out.core = MultiGraph((int)out.to_orig.size());
    for (auto& e : cb.es)
        if (e.alive) {
            out.core.edges.push_back({newid[e.u], newid[e.v]});
            out.edge_path.push_back(e.walk);
        }
    return out;
}

std::vector<int> CoreResult::lift_cycle(const MultiCycle& c) const {
    std::vector<int> out;
    int len = c.length();
    if (len == 1) {  // loop: walk is closed
        const auto& w = edge_path[c.edge_ids[0]];
        out.assign(w.begin(), w.end() - 1);
        return out;
    }
    for (int i = 0; i < len; ++i) {
        int from = to_orig[c.verts[i]];
        std::vector<int> w = edge_path[c.edge_ids[i]];
        if (w.front() != from) std::reverse(w.begin(), w.end());
        out.insert(out.end(), w.begin(), w.end() - 1);
    }
    return out;
}

std::optional<MultiCycle> shortest_cycle(const MultiGraph& m) {
    // loops first
    for (size_t e = 0; e < m.edges.size(); ++e)
        if (m.edges[e].first == m.edges[e].second)
            return MultiCycle{{m.edges[e].first}, {(int)e}};
    // parallel pairs
    std::map<std::pair<int, int>, int> seen;
    for (size_t e = 0; e < m.edges.size(); ++e) {
        auto [u, v] = m.edges[e];
        auto key = std::minmax(u, v);
        auto it = seen.find({key.first, key.second});
        if (it != seen.end())
            return MultiCycle{{key.first, key.second}, {it->second, (int)e}};
        seen[{key.first, key.second}] = (int)e;
    }
    // simple girth by BFS from every vertex
    std::vector<std::vector<std::pair<int, int>>> adj(m.n);  // (nbr, edge id)
    for (auto& [key, e] : seen) {
        adj[key.first].push_back({key.second, e});
        adj[key.second].push_back({key.first, e});
    }
    int best = -1;
    MultiCycle best_cycle;
    std::vector<int> dist(m.n), par(m.n), pare(m.n);
    for (int s = 0; s < m.n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::queue<int> q;
        dist[s] = 0;
        par[s] = -1;
        pare[s] = -1;
        q.push(s);
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            if (best >= 0 && 2 * dist[x] >= best) break;
            for (auto [y, e] : adj[x]) {
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    par[y] = x;
                    pare[y] = e;
                    q.push(y);
                } else if (e != pare[x] && e != pare[y]) {
                    int len = dist[x] + dist[y] + 1;
                    if (best < 0 || len < best) {
                        // reconstruct: climb to the common ancestor
                        std::vector<int> px, py;
                        std::vector<int> pxe, pye;
                        for (int t = x; t != -1; t = par[t]) px.push_back(t);
                        for (int t = y; t != -1; t = par[t]) py.push_back(t);
                        for (int t = x; t != -1; t = par[t]) pxe.push_back(pare[t]);
                        for (int t = y; t != -1; t = par[t]) pye.push_back(pare[t]);
                        while (px.size() >= 2 && py.size() >= 2 && px[px.size() - 2] == py[py.size() - 2]) {
                            px.pop_back();
                            pxe.pop_back();
                            py.pop_back();
                            pye.pop_back();
                        }
                        MultiCycle mc;
                        // cycle: px reversed (ancestor..x), edge e, then py (y..ancestor)
                        for (int i = (int)px.size() - 1; i >= 0; --i) mc.verts.push_back(px[i]);
                        for (int i = (int)px.size() - 2; i >= 0; --i) mc.edge_ids.push_back(pxe[i]);
                        mc.edge_ids.push_back(e);
                        for (int i = 0; i + 1 < (int)py.size(); ++i) {
                            mc.verts.push_back(py[i]);
                            mc.edge_ids.push_back(pye[i]);
                        }
                        if ((int)mc.verts.size() == mc.length() && mc.length() >= 3) {
                            int len2 = mc.length();
                            if (best < 0 || len2 < best) {
                                best = len2;
                                best_cycle = std::move(mc);
                            }
                        }
                    }
                }
            }
        }
    }
    if (best < 0) return std::nullopt;
    return best_cycle;
}

}  // namespace pancover
