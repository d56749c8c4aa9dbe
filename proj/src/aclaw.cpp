#include "pancover/aclaw.hpp"

#include <algorithm>
#include <queue>

#include "pancover/flow.hpp"

namespace pancover {

VertexSet AClaw::vertex_set() const {
    std::vector<int> v = {center};
    for (auto& l : legs) v.insert(v.end(), l.begin(), l.end());
    return vset_sorted(std::move(v));
}

std::vector<int> AClaw::leaves() const {
    std::vector<int> out;
    for (auto& l : legs) out.push_back(l.back());
    return out;
}

bool verify_aclaw(const Graph& g, const VertexSet& a, const AClaw& c) {
    if (c.legs.size() != 3) return false;
    if (vset_contains(a, c.center)) return false;
    VertexSet seen = {c.center};
    for (auto& leg : c.legs) {
        if (leg.size() < 2 || leg.front() != c.center) return false;
        if (!is_path_of(g, leg)) return false;
        if (!vset_contains(a, leg.back())) return false;
        for (size_t i = 0; i + 1 < leg.size(); ++i)
            if (vset_contains(a, leg[i])) return false;
        for (size_t i = 1; i < leg.size(); ++i) {
            if (vset_contains(seen, leg[i])) return false;
            seen = vset_union(seen, {leg[i]});
        }
    }
    return true;
}

std::optional<AClaw> find_aclaw(const Graph& g, const VertexSet& a) {
    for (int v = 0; v < g.n(); ++v) {
        if (g.degree(v) < 3 || vset_contains(a, v)) continue;
        auto paths = vertex_disjoint_paths(g, v, a, 3);
        if (paths.size() == 3) return AClaw{v, std::move(paths)};
    }
    return std::nullopt;
}

namespace {

// Reduced view of a forest: branch vertices (degree 3) and leaves (degree 1),
// with the degree-2 chains compressed into edge paths.
struct Reduced {
    std::vector<int> verts;                    // original ids, reduced vertices
    std::vector<int> idx;                      // original id -> reduced id (-1)
    std::vector<std::vector<int>> adj;         // reduced adjacency (edge ids)
    struct REdge {
        int u, v;
        std::vector<int> path;  // original ids from verts[u] to verts[v]
    };
    std::vector<REdge> edges;

    int other(int e, int x) const { return edges[e].u == x ? edges[e].v : edges[e].u; }
    std::vector<int> oriented(int e, int from) const {
        auto p = edges[e].path;
        if (idx[p.front()] != from) std::reverse(p.begin(), p.end());
        return p;
    }
};

Reduced reduce_forest(const Graph& f, const std::vector<char>& alive) {
    Reduced r;
    r.idx.assign(f.n(), -1);
    auto deg = [&](int v) {
        int d = 0;
        for (int w : f.neighbors(v))
            if (alive[w]) ++d;
        return d;
    };
    for (int v = 0; v < f.n(); ++v)
        if (alive[v] && deg(v) != 2 && deg(v) != 0) {
            r.idx[v] = (int)r.verts.size();
            r.verts.push_back(v);
        }
    r.adj.resize(r.verts.size());
    for (size_t i = 0; i < r.verts.size(); ++i) {
        int v = r.verts[i];
        for (int w0 : f.neighbors(v)) {
            if (!alive[w0]) continue;
            // walk the chain
            std::vector<int> path = {v};
            int prev = v, cur = w0;
            while (r.idx[cur] < 0) {
                path.push_back(cur);
                int nxt = -1;
                for (int x : f.neighbors(cur))
                    if (alive[x] && x != prev) nxt = x;
                prev = cur;
                cur = nxt;
            }
            path.push_back(cur);
            if (r.idx[cur] < (int)i) continue;  // chain recorded from the other side
            if (r.idx[cur] == (int)i) continue; // cannot happen in a forest
            int id = (int)r.edges.size();
            r.edges.push_back({(int)i, r.idx[cur], std::move(path)});
            r.adj[i].push_back(id);
            r.adj[r.idx[cur]].push_back(id);
        }
    }
    return r;
}

// Walks from a branch vertex along edge e to the first leaf, descending
// away from `from`; returns the original-id leg (center first).
std::vector<int> walk_to_leaf(const Reduced& r, int start, int first_edge) {
    std::vector<int> leg;
    int cur = start, e = first_edge;
    while (true) {
        auto seg = r.oriented(e, cur);
        if (leg.empty())
            leg = seg;
        else
            leg.insert(leg.end(), seg.begin() + 1, seg.end());
        int nxt = r.other(e, cur);
        if (r.adj[nxt].size() == 1) return leg;  // reduced leaf
        for (int e2 : r.adj[nxt])
            if (e2 != e) {
                e = e2;
                break;
            }
        cur = nxt;
    }
}

}  // namespace

std::vector<AClaw> claws_from_leafy_forest(const Graph& f, int k) {
    // precondition checks
    int leaves = 0;
    for (int v = 0; v < f.n(); ++v) {
        if (f.degree(v) > 3) throw PreconditionError("claws_from_leafy_forest: degree above 3");
        if (f.degree(v) == 1) ++leaves;
    }
    auto comps = components(f);
    int real_comps = 0;
    for (auto& c : comps) {
        if (c.size() == 1 && f.degree(c[0]) == 0) continue;
        ++real_comps;
        bool has3 = false;
        for (int v : c)
            if (f.degree(v) == 3) has3 = true;
        if (!has3) throw PreconditionError("claws_from_leafy_forest: component without a branch vertex");
    }
    if (f.edge_count() != f.n() - (int)comps.size())
        throw PreconditionError("claws_from_leafy_forest: not a forest");
    if (leaves < 6 * k && real_comps < k)
        throw PreconditionError("claws_from_leafy_forest: fewer than 6k leaves");

    std::vector<char> alive(f.n(), 1);
    std::vector<AClaw> out;
    while ((int)out.size() < k) {
        Reduced r = reduce_forest(f, alive);
        // pick the component (in the reduced forest) containing the smallest
        // branch vertex; root it there and find a deepest branch vertex
        int root = -1;
        for (size_t i = 0; i < r.verts.size(); ++i)
            if (r.adj[i].size() == 3) {
                root = (int)i;
                break;
            }
        if (root < 0) throw std::logic_error("claws_from_leafy_forest: ran out of branch vertices");
        std::vector<int> depth(r.verts.size(), -1), parent(r.verts.size(), -1), pedge(r.verts.size(), -1);
        std::queue<int> q;
        depth[root] = 0;
        q.push(root);
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (int e : r.adj[x]) {
                int y = r.other(e, x);
                if (depth[y] < 0) {
                    depth[y] = depth[x] + 1;
                    parent[y] = x;
                    pedge[y] = e;
                    q.push(y);
                }
            }
        }
        int v = -1;
        for (size_t i = 0; i < r.verts.size(); ++i)
            if (depth[i] >= 0 && r.adj[i].size() == 3)
                if (v < 0 || depth[i] > depth[v]) v = (int)i;

        // claw at v: the two downward legs plus one through the parent side
        AClaw claw;
        claw.center = r.verts[v];
        std::vector<int> to_remove;  // reduced vertices whose expansion dies
        auto kill = [&](const std::vector<int>& rem) {
            for (int i : rem)
                for (int e : r.adj[i]) {
                    const auto& p = r.edges[e].path;
                    for (size_t x = 1; x + 1 < p.size(); ++x) alive[p[x]] = 0;
                }
            for (int i : rem) alive[r.verts[i]] = 0;
        };
        if (v == root) {
            for (int e : r.adj[v]) claw.legs.push_back(walk_to_leaf(r, v, e));
            // remove the whole component
            for (size_t i = 0; i < r.verts.size(); ++i)
                if (depth[i] >= 0) to_remove.push_back((int)i);
            kill(to_remove);
        } else {
            int w = parent[v];
            for (int e : r.adj[v])
                if (e != pedge[v]) claw.legs.push_back(walk_to_leaf(r, v, e));
            // third leg: v -> w -> first other direction downward
            for (int e : r.adj[w])
                if (e != pedge[v] && e != pedge[w]) {
                    auto up = r.oriented(pedge[v], v);  // v .. w
                    auto down = walk_to_leaf(r, w, e);
                    up.insert(up.end(), down.begin() + 1, down.end());
                    claw.legs.push_back(std::move(up));
                    break;
                }
            // remove T_w: w, its descendants, their chains, and the chain to w's parent
            std::vector<char> inw(r.verts.size(), 0);
            std::vector<int> stack = {w};
            inw[w] = 1;
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                to_remove.push_back(x);
                for (int e : r.adj[x]) {
                    int y = r.other(e, x);
                    if (y == parent[x] && e == pedge[x]) continue;
                    if (!inw[y]) {
                        inw[y] = 1;
                        stack.push_back(y);
                    }
                }
            }
            kill(to_remove);  // also clears the interior of the chain toward w's parent
        }
        out.push_back(std::move(claw));
    }
    return out;
}

AClawEpResult aclaw_ep(const Graph& g, const VertexSet& a, int k) {
    VertexSet s;
    std::vector<std::vector<int>> fadj(g.n());
    std::vector<char> in_f(g.n(), 0);
    auto fdeg = [&](int v) { return (int)fadj[v].size(); };
    auto add_f_edge = [&](int u, int v) {
        fadj[u].push_back(v);
        fadj[v].push_back(u);
        in_f[u] = 1;
        in_f[v] = 1;
    };
    auto recompute_s = [&]() {
        s.clear();
        for (int v = 0; v < g.n(); ++v)
            if (in_f[v] && (fdeg(v) == 1 || fdeg(v) == 3)) s.push_back(v);
    };

    while (true) {
        auto sub = remove_vertices(g, s);
        VertexSet suba;
        for (int i = 0; i < sub.graph.n(); ++i)
            if (vset_contains(a, sub.to_orig[i])) suba.push_back(i);
        auto claw0 = find_aclaw(sub.graph, suba);
        if (!claw0) break;
        AClaw claw;  // translate to original ids
        claw.center = sub.to_orig[claw0->center];
        for (auto& leg : claw0->legs) {
            std::vector<int> l;
            for (int x : leg) l.push_back(sub.to_orig[x]);
            claw.legs.push_back(std::move(l));
        }
        VertexSet x = claw.vertex_set();
        VertexSet xf;
        for (int v : x)
            if (in_f[v]) xf.push_back(v);
        if (!xf.empty()) {
            // attach a shortest path inside the claw from F to A
            std::vector<std::vector<int>> cadj(g.n());
            for (auto& leg : claw.legs)
                for (size_t i = 0; i + 1 < leg.size(); ++i) {
                    cadj[leg[i]].push_back(leg[i + 1]);
                    cadj[leg[i + 1]].push_back(leg[i]);
                }
            std::vector<int> par(g.n(), -2);
            std::queue<int> q;
            for (int v : xf) {
                par[v] = -1;
                q.push(v);
            }
            int hit = -1;
            while (!q.empty() && hit < 0) {
                int v = q.front();
                q.pop();
                if (vset_contains(a, v)) {
                    hit = v;
                    break;
                }
                for (int w : cadj[v])
                    if (par[w] == -2) {
                        par[w] = v;
                        q.push(w);
                    }
            }
            if (hit < 0) throw std::logic_error("aclaw_ep: claw lost its leaves");
            std::vector<int> path;
            for (int v = hit; v != -1; v = par[v]) path.push_back(v);
            std::reverse(path.begin(), path.end());
            for (size_t i = 0; i + 1 < path.size(); ++i) add_f_edge(path[i], path[i + 1]);
        } else {
            for (auto& leg : claw.legs)
                for (size_t i = 0; i + 1 < leg.size(); ++i) add_f_edge(leg[i], leg[i + 1]);
        }
        recompute_s();
    }

    AClawEpResult res;
    res.terminal_s = s;

    VertexSet fverts;
    for (int v = 0; v < g.n(); ++v)
        if (in_f[v]) fverts.push_back(v);
    Graph fg((int)fverts.size());
    for (int i = 0; i < fg.n(); ++i)
        for (int w : fadj[fverts[i]]) {
            int j = (int)(std::lower_bound(fverts.begin(), fverts.end(), w) - fverts.begin());
            if (j > i) fg.add_edge(i, j);
        }
    auto comps = components(fg);
    if ((int)comps.size() < k && (long long)s.size() <= 14LL * k) {
        res.is_packing = false;
        res.cover = s;
        return res;
    }
    std::vector<AClaw> claws;
    if ((int)comps.size() >= k) {
        Reduced r = reduce_forest(fg, std::vector<char>(fg.n(), 1));
        for (const auto& comp : comps) {
            if ((int)claws.size() == k) break;
            int center = -1;
            for (int v : comp)
                if (fg.degree(v) == 3) {
                    center = v;
                    break;
                }
            if (center < 0) throw std::logic_error("aclaw_ep: component without branch vertex");
            AClaw cl;
            cl.center = fverts[center];
            int rid = r.idx[center];
            for (int e : r.adj[rid]) {
                auto leg = walk_to_leaf(r, rid, e);
                for (int& x : leg) x = fverts[x];
                cl.legs.push_back(std::move(leg));
            }
            claws.push_back(std::move(cl));
        }
    } else {
        claws = claws_from_leafy_forest(fg, k);
        for (auto& cl : claws) {
            cl.center = fverts[cl.center];
            for (auto& leg : cl.legs)
                for (int& x : leg) x = fverts[x];
        }
    }
    for (auto& cl : claws)
        if (!verify_aclaw(g, a, cl)) throw std::logic_error("aclaw_ep: invalid extracted claw");
    for (size_t i = 0; i < claws.size(); ++i)
        for (size_t j = i + 1; j < claws.size(); ++j)
            if (!vsets_disjoint(claws[i].vertex_set(), claws[j].vertex_set()))
                throw std::logic_error("aclaw_ep: extracted claws overlap");
    res.is_packing = true;
    res.claws = std::move(claws);
    return res;
}

}  // namespace pancover
