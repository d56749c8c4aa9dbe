#include "pancover/forge.hpp"

#include <algorithm>
#include <functional>
#include <istream>
#include <sstream>

namespace pancover {

std::vector<int> LabeledGraph::role_all(const std::string& name, int index) const {
    std::vector<int> out;
    for (const auto& [n, i, v] : roles)
        if (n == name && i == index) out.push_back(v);
    return out;
}

int LabeledGraph::role_at(const std::string& name, int index) const {
    for (const auto& [n, i, v] : roles)
        if (n == name && i == index) return v;
    throw std::out_of_range("role " + name + "/" + std::to_string(index) + " not found");
}

std::string serialize_labeled(const LabeledGraph& lg) {
    std::ostringstream os;
    os << "p ind " << lg.graph.n() << " " << lg.graph.edge_count() << "\n";
    os << "c family " << lg.family << "\n";
    for (const auto& [k, v] : lg.params) os << "c param " << k << " " << v << "\n";
    for (const auto& [name, idx, v] : lg.roles)
        os << "c role " << name << " " << idx << " " << v + 1 << "\n";
    for (auto [u, v] : lg.graph.edges()) os << "e " << u + 1 << " " << v + 1 << "\n";
    return os.str();
}

LabeledGraph parse_labeled(std::istream& in) {
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    LabeledGraph lg;
    lg.graph = parse_graph_string(text, "ind");
    std::istringstream iss(text);
    std::string line;
    while (std::getline(iss, line)) {
        std::istringstream ls(line);
        std::string tag, what;
        if (!(ls >> tag) || tag != "c") continue;
        ls >> what;
        if (what == "family") {
            ls >> lg.family;
        } else if (what == "param") {
            std::string key;
            int val;
            ls >> key >> val;
            lg.params[key] = val;
        } else if (what == "role") {
            std::string name;
            int idx, v;
            ls >> name >> idx >> v;
            lg.add_role(name, idx, v - 1);
        }
    }
    return lg;
}

// ---- triangle wall ---------------------------------------------------------

namespace {

// Coordinate arithmetic for Gamma_m: m rows of 2m-garlands.
struct Wall {
    int m;
    int xv(int row, int pos) const { return row * 6 * m + 3 * pos; }
    int yv(int row, int pos) const { return xv(row, pos) + 1; }
    int zv(int row, int pos) const { return xv(row, pos) + 2; }
    int size() const { return 6 * m * m; }
    int a(int i) const { return zv(0, 2 * i); }
    int b(int i) const { return m % 2 == 0 ? zv(m - 1, 2 * (m - i - 1)) : zv(m - 1, 2 * (m - i) - 1); }
    int b_col(int i) const { return m - i - 1; }

    void build_edges(Graph& g) const {
        for (int r = 0; r < m; ++r) {
            for (int p = 0; p < 2 * m; ++p) {
                g.add_edge(xv(r, p), yv(r, p));
                if (p + 1 < 2 * m) g.add_edge(yv(r, p), xv(r, p + 1));
                g.add_edge(zv(r, p), xv(r, p));
                g.add_edge(zv(r, p), yv(r, p));
            }
        }
        for (int r = 0; r + 1 < m; ++r)
            for (int p = 0; p < 2 * m; ++p)
                if ((r % 2 == 0 && p % 2 == 1) || (r % 2 == 1 && p % 2 == 0))
                    g.add_edge(zv(r, p), zv(r + 1, p));
    }

    // Cells of one column over a row range; the leftmost x and rightmost y of
    // every row can be excluded so parallel descents in adjacent columns stay
    // non-adjacent.
    void column_cells(int col, int row_lo, int row_hi, bool exclude_boundary, std::vector<int>& out) const {
        for (int r = row_lo; r <= row_hi; ++r) {
            if (!exclude_boundary) out.push_back(xv(r, 2 * col));
            out.push_back(yv(r, 2 * col));
            out.push_back(zv(r, 2 * col));
            out.push_back(xv(r, 2 * col + 1));
            if (!exclude_boundary) out.push_back(yv(r, 2 * col + 1));
            out.push_back(zv(r, 2 * col + 1));
        }
    }

    void row_spine(int row, int col_lo, int col_hi, std::vector<int>& out) const {
        for (int p = 2 * col_lo; p <= 2 * col_hi + 1; ++p) {
            out.push_back(xv(row, p));
            out.push_back(yv(row, p));
        }
    }

    bool row_untouched(int row, const VertexSet& x) const {
        for (int p = 0; p < 2 * m; ++p)
            if (vset_contains(x, xv(row, p)) || vset_contains(x, yv(row, p)) ||
                vset_contains(x, zv(row, p)))
                return false;
        return true;
    }
};

void add_wall_roles(LabeledGraph& lg, const Wall& w) {
    for (int i = 0; i < w.m; ++i) lg.add_role("a", i, w.a(i));
    for (int i = 0; i < w.m; ++i) lg.add_role("b", i, w.b(i));
    for (int c = 0; c < w.m; ++c) {
        std::vector<int> cells;
        w.column_cells(c, 0, w.m - 1, false, cells);
        for (int v : cells) lg.add_role("col", c, v);
    }
    for (int r = 0; r < w.m; ++r)
        for (int p = 0; p < 2 * w.m; ++p) {
            lg.add_role("row", r, w.xv(r, p));
            lg.add_role("row", r, w.yv(r, p));
            lg.add_role("row", r, w.zv(r, p));
        }
}

}  // namespace

LabeledGraph garland(int n) {
    if (n < 2) throw PreconditionError("garland: n must be at least 2");
    LabeledGraph lg;
    lg.family = "garland";
    lg.params["n"] = n;
    Graph g(3 * n);
    auto x = [&](int i) { return 3 * i; };
    auto y = [&](int i) { return 3 * i + 1; };
    auto z = [&](int i) { return 3 * i + 2; };
    for (int i = 0; i < n; ++i) {
        g.add_edge(x(i), y(i));
        if (i + 1 < n) g.add_edge(y(i), x(i + 1));
        g.add_edge(z(i), x(i));
        g.add_edge(z(i), y(i));
    }
    lg.graph = std::move(g);
    for (int i = 0; i < n; ++i) {
        lg.add_role("x", i, x(i));
        lg.add_role("y", i, y(i));
        lg.add_role("z", i, z(i));
    }
    return lg;
}

LabeledGraph triangle_wall(int n) {
    if (n < 2) throw PreconditionError("triangle_wall: n must be at least 2");
    Wall w{n};
    LabeledGraph lg;
    lg.family = "triangle-wall";
    lg.params["n"] = n;
    Graph g(w.size());
    w.build_edges(g);
    lg.graph = std::move(g);
    add_wall_roles(lg, w);
    return lg;
}

LabeledGraph build_k2r_ce(int r, int n) {
    if (r < 3) throw PreconditionError("build_k2r_ce: r must be at least 3");
    if (n < 1) throw PreconditionError("build_k2r_ce: n must be at least 1");
    Wall w{r * n};
    LabeledGraph lg;
    lg.family = "k2r";
    lg.params["r"] = r;
    lg.params["n"] = n;
    Graph g(w.size() + 2 * n);
    w.build_edges(g);
    auto u = [&](int i) { return w.size() + i; };
    auto v = [&](int i) { return w.size() + n + i; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < r; ++j) {
            g.add_edge(u(i), w.a(i * r + j));
            g.add_edge(v(i), w.b(i * r + j));
        }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (i < j) {
                g.add_edge(u(i), u(j));
                g.add_edge(v(i), v(j));
            }
            g.add_edge(u(i), v(j));
        }
    lg.graph = std::move(g);
    add_wall_roles(lg, w);
    for (int i = 0; i < n; ++i) lg.add_role("u", i, u(i));
    for (int i = 0; i < n; ++i) lg.add_role("v", i, v(i));
    return lg;
}

// ---- forest counterexample --------------------------------------------------

namespace {

struct ForestSplit {
    int v, vp;           // the split edge, v on the u-side
    VertexSet t, tp, d;  // components of h - vv' (t holds v, tp holds v'), rest
    VertexSet f, fp;     // t minus the u..v path, tp minus the u'..v' path
};

ForestSplit split_forest(const Graph& h) {
    // find two branch vertices in one component at minimum distance
    int best_u = -1, best_up = -1, best_d = 0;
    for (int a = 0; a < h.n(); ++a) {
        if (h.degree(a) < 3) continue;
        auto dist = bfs_dist(h, a);
        for (int b = 0; b < h.n(); ++b) {
            if (b == a || h.degree(b) < 3 || dist[b] < 0) continue;
            if (best_u < 0 || dist[b] < best_d) {
                best_u = a;
                best_up = b;
                best_d = dist[b];
            }
        }
    }
    if (best_u < 0)
        throw PreconditionError("forest pattern needs two branch vertices in one component");
    // path u .. u'
    VertexSet all(h.n());
    for (int i = 0; i < h.n(); ++i) all[i] = i;
    auto path = shortest_path_within(h, best_u, best_up, all);
    ForestSplit fs;
    fs.v = path[0];
    fs.vp = path[1];
    // components of h minus the edge vv'
    Graph cut = remove_edges(h, {{fs.v, fs.vp}});
    for (const auto& comp : components(cut)) {
        if (vset_contains(comp, fs.v))
            fs.t = comp;
        else if (vset_contains(comp, fs.vp))
            fs.tp = comp;
        else
            fs.d = vset_union(fs.d, comp);
    }
    fs.f = vset_minus(fs.t, {fs.v});  // v == u: the u..v path is the single vertex
    VertexSet upath;                  // v' .. u'
    for (size_t i = 1; i < path.size(); ++i) upath.push_back(path[i]);
    fs.fp = vset_minus(fs.tp, vset_sorted(upath));
    return fs;
}

}  // namespace

LabeledGraph build_forest_ce(const Pattern& h, int n) {
    const Graph& hg = h.graph;
    if (hg.edge_count() != hg.n() - (int)components(hg).size())
        throw PreconditionError("build_forest_ce: pattern is not a forest");
    auto fs = split_forest(hg);
    if (n < 2) throw PreconditionError("build_forest_ce: n must be at least 2");

    Wall w{n};
    LabeledGraph lg;
    lg.family = "forest";
    lg.params["n"] = n;
    lg.params["hn"] = hg.n();
    Graph g(w.size() + n * hg.n());
    w.build_edges(g);
    auto copy = [&](int i, int hv) { return w.size() + i * hg.n() + hv; };
    for (int i = 0; i < n; ++i) {
        for (auto [a, b] : hg.edges())
            if (!((a == fs.v && b == fs.vp) || (a == fs.vp && b == fs.v)))
                g.add_edge(copy(i, a), copy(i, b));
        g.add_edge(copy(i, fs.v), w.a(i));
        g.add_edge(copy(i, fs.vp), w.b(i));
    }
    // completion: F_i + D_i vs F_j + D_j, F'_i + D_i vs F'_j + D_j, and across
    auto blob_ff = [&](int i) {
        std::vector<int> out;
        for (int hv : fs.f) out.push_back(copy(i, hv));
        for (int hv : fs.d) out.push_back(copy(i, hv));
        return out;
    };
    auto blob_gg = [&](int i) {
        std::vector<int> out;
        for (int hv : fs.fp) out.push_back(copy(i, hv));
        for (int hv : fs.d) out.push_back(copy(i, hv));
        return out;
    };
    auto join = [&](const std::vector<int>& xs, const std::vector<int>& ys) {
        for (int x : xs)
            for (int y : ys)
                if (x != y && !g.has_edge(x, y)) g.add_edge(x, y);
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            join(blob_ff(i), blob_ff(j));
            join(blob_gg(i), blob_gg(j));
            join(blob_ff(i), blob_gg(j));
            join(blob_ff(j), blob_gg(i));
        }
    lg.graph = std::move(g);
    add_wall_roles(lg, w);
    for (int i = 0; i < n; ++i)
        for (int hv = 0; hv < hg.n(); ++hv) lg.add_role("copy", i * hg.n() + hv, copy(i, hv));
    return lg;
}

// ---- hypergraph family -------------------------------------------------------

namespace {

std::vector<std::vector<int>> ksubsets(int universe, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int from) {
        if ((int)cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (int i = from; i <= universe - (k - (int)cur.size()); ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

// Subdivision of h with every edge replaced by a path with `inner` internal
// vertices. Vertices 0..|h|-1 are the originals; chains are appended in
// edges() order.
struct SubdivLayout {
    Graph graph;
    std::vector<std::vector<int>> chains;  // per h-edge: full chain u .. v
};

SubdivLayout subdivide_all(const Graph& h, int inner) {
    auto es = h.edges();
    SubdivLayout s;
    s.graph = Graph(h.n() + inner * (int)es.size());
    int next = h.n();
    for (auto [u, v] : es) {
        std::vector<int> chain = {u};
        for (int t = 0; t < inner; ++t) chain.push_back(next++);
        chain.push_back(v);
        for (size_t i = 0; i + 1 < chain.size(); ++i) s.graph.add_edge(chain[i], chain[i + 1]);
        s.chains.push_back(std::move(chain));
    }
    return s;
}

}  // namespace

LabeledGraph build_ub(int k, int path_cap) {
    if (k < 2) throw PreconditionError("build_ub: k must be at least 2");
    auto hyper = ksubsets(2 * k - 1, k);
    if ((long long)hyper.size() > path_cap)
        throw PreconditionError("build_ub: hyperedge count exceeds the cap");
    LabeledGraph lg;
    lg.family = "ub";
    lg.params["k"] = k;
    int na = 2 * k - 1;
    Graph g(na + (int)hyper.size() * (k + 1));
    auto pv = [&](int e, int t) { return na + e * (k + 1) + t; };
    for (size_t e = 0; e < hyper.size(); ++e)
        for (int t = 0; t < k; ++t) {
            g.add_edge(pv((int)e, t), hyper[e][t]);
            g.add_edge(hyper[e][t], pv((int)e, t + 1));
        }
    lg.graph = std::move(g);
    for (int i = 0; i < na; ++i) lg.add_role("A", i, i);
    for (size_t e = 0; e < hyper.size(); ++e)
        for (int t = 0; t <= k; ++t) lg.add_role("p", (int)e * (k + 1) + t, pv((int)e, t));
    return lg;
}

std::optional<std::vector<int>> find_induced_cycle_min_len(const Graph& h, int min_len) {
    if (h.n() > 24) throw PreconditionError("pattern too large for cycle enumeration");
    for (uint32_t mask = 0; mask < (1u << h.n()); ++mask) {
        if (__builtin_popcount(mask) < min_len) continue;
        VertexSet s;
        for (int v = 0; v < h.n(); ++v)
            if (mask >> v & 1) s.push_back(v);
        auto sub = induced_subgraph(h, s);
        bool cyc = is_connected(sub.graph) && sub.graph.edge_count() == sub.graph.n();
        for (int v = 0; cyc && v < sub.graph.n(); ++v)
            if (sub.graph.degree(v) != 2) cyc = false;
        if (!cyc) continue;
        std::vector<int> order = {0};
        int prev = -1, cur = 0;
        while ((int)order.size() < sub.graph.n()) {
            int nxt = sub.graph.neighbors(cur)[0] == prev ? sub.graph.neighbors(cur)[1]
                                                          : sub.graph.neighbors(cur)[0];
            order.push_back(nxt);
            prev = cur;
            cur = nxt;
        }
        std::vector<int> out;
        for (int v : order) out.push_back(sub.to_orig[v]);
        return out;
    }
    return std::nullopt;
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> find_cycle_with_far_set(
    const Graph& h, int far_count, bool far_adjacent_pair) {
    if (h.n() > 24) throw PreconditionError("pattern too large for cycle enumeration");
    for (uint32_t mask = 0; mask < (1u << h.n()); ++mask) {
        if (__builtin_popcount(mask) < 3) continue;
        VertexSet s;
        for (int v = 0; v < h.n(); ++v)
            if (mask >> v & 1) s.push_back(v);
        auto sub = induced_subgraph(h, s);
        bool cyc = is_connected(sub.graph) && sub.graph.edge_count() == sub.graph.n();
        for (int v = 0; cyc && v < sub.graph.n(); ++v)
            if (sub.graph.degree(v) != 2) cyc = false;
        if (!cyc) continue;
        VertexSet far;
        for (int v = 0; v < h.n(); ++v) {
            if (vset_contains(s, v)) continue;
            bool clean = true;
            for (int w : h.neighbors(v))
                if (vset_contains(s, w)) clean = false;
            if (clean) far.push_back(v);
        }
        std::vector<int> chosen;
        if (far_adjacent_pair) {
            for (size_t i = 0; i < far.size() && chosen.empty(); ++i)
                for (size_t j = i + 1; j < far.size(); ++j)
                    if (h.has_edge(far[i], far[j])) {
                        chosen = {far[i], far[j]};
                        break;
                    }
            if (chosen.empty()) continue;
        } else {
            if ((int)far.size() < far_count) continue;
            chosen.assign(far.begin(), far.begin() + far_count);
        }
        std::vector<int> order = {0};
        int prev = -1, cur = 0;
        while ((int)order.size() < sub.graph.n()) {
            int nxt = sub.graph.neighbors(cur)[0] == prev ? sub.graph.neighbors(cur)[1]
                                                          : sub.graph.neighbors(cur)[0];
            order.push_back(nxt);
            prev = cur;
            cur = nxt;
        }
        std::vector<int> out;
        for (int v : order) out.push_back(sub.to_orig[v]);
        return std::make_pair(out, chosen);
    }
    return std::nullopt;
}

LabeledGraph build_longcycle_ce(const Pattern& h, int n, int path_cap) {
    std::vector<int> cyc;
    if (auto c5 = find_induced_cycle_min_len(h.graph, 5)) {
        cyc = *c5;
    } else if (auto fp = find_cycle_with_far_set(h.graph, 2, true)) {
        cyc = fp->first;
    } else {
        throw PreconditionError(
            "build_longcycle_ce: pattern has neither a long induced cycle nor a far adjacent pair");
    }
    if (n < h.graph.n()) throw PreconditionError("build_longcycle_ce: n must be at least |h|");
    auto hyper = ksubsets(2 * n - 1, n);
    if ((long long)hyper.size() > path_cap)
        throw PreconditionError("build_longcycle_ce: hyperedge count exceeds the cap");

    auto sd = subdivide_all(h.graph, 2 * n - 1);
    // the chain of the first cycle edge is identified with the UB paths
    auto hedges = h.graph.edges();
    int uvidx = -1;
    for (size_t i = 0; i < hedges.size(); ++i)
        if ((hedges[i].first == std::min(cyc[0], cyc[1]) && hedges[i].second == std::max(cyc[0], cyc[1])))
            uvidx = (int)i;
    const auto& uvchain = sd.chains[uvidx];  // 2n+1 vertices

    LabeledGraph lg;
    lg.family = "hyper";
    lg.params["n"] = n;
    lg.params["hn"] = h.graph.n();
    int na = 2 * n - 1;
    int fresh_per = sd.graph.n() - n;  // n chain vertices are identified with A
    int total = na + (int)hyper.size() * fresh_per;

    // per copy: map subdivision vertices to host ids
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> maps(hyper.size(), std::vector<int>(sd.graph.n(), -1));
    auto sedges = sd.graph.edges();
    for (size_t e = 0; e < hyper.size(); ++e) {
        for (int t = 1; t <= n; ++t) maps[e][uvchain[2 * t - 1]] = hyper[e][t - 1];
        int next = na + (int)e * fresh_per;
        for (int w2 = 0; w2 < sd.graph.n(); ++w2)
            if (maps[e][w2] < 0) maps[e][w2] = next++;
        for (auto [x, y] : sedges) edges.push_back({maps[e][x], maps[e][y]});
    }
    // completion between fresh parts of distinct copies
    std::vector<std::vector<int>> fresh(hyper.size());
    for (size_t e = 0; e < hyper.size(); ++e)
        for (int w2 = 0; w2 < sd.graph.n(); ++w2)
            if (maps[e][w2] >= na) fresh[e].push_back(maps[e][w2]);
    for (size_t e = 0; e < hyper.size(); ++e)
        for (size_t f = e + 1; f < hyper.size(); ++f)
            for (int ve : fresh[e])
                for (int vf : fresh[f]) edges.push_back({ve, vf});
    lg.graph = Graph::from_edges(total, std::move(edges));
    for (int i = 0; i < na; ++i) lg.add_role("A", i, i);
    for (size_t e = 0; e < hyper.size(); ++e)
        for (int w2 = 0; w2 < sd.graph.n(); ++w2)
            lg.add_role("copy", (int)e * sd.graph.n() + w2, maps[e][w2]);
    return lg;
}

// ---- semi-grid ---------------------------------------------------------------

namespace {

struct SemiGrid {
    int n;
    int id(int i, int j) const { return (i - 1) * i / 2 + (j - 1); }  // 1 <= j <= i <= n
    int size() const { return n * (n + 1) / 2; }
    std::vector<int> path(int i) const {  // P_i, 1-based i
        std::vector<int> out;
        for (int j = 1; j <= i; ++j) out.push_back(id(i, j));
        for (int t = i + 1; t <= n; ++t) out.push_back(id(t, i));
        return out;
    }
};

}  // namespace

LabeledGraph build_semigrid(int n) {
    if (n < 3) throw PreconditionError("build_semigrid: n must be at least 3");
    SemiGrid sg{n};
    LabeledGraph lg;
    lg.family = "semigrid";
    lg.params["n"] = n;
    Graph g(sg.size());
    for (int i = 1; i <= n; ++i) {
        auto p = sg.path(i);
        for (size_t t = 0; t + 1 < p.size(); ++t)
            if (!g.has_edge(p[t], p[t + 1])) g.add_edge(p[t], p[t + 1]);
    }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= i; ++j)
            for (int a = i; a <= n; ++a)
                for (int b = 1; b <= a; ++b) {
                    if (a == i && b <= j) continue;
                    bool share = (a == i || b == i || a == j || b == j);
                    if (!share && !g.has_edge(sg.id(i, j), sg.id(a, b)))
                        g.add_edge(sg.id(i, j), sg.id(a, b));
                }
    lg.graph = std::move(g);
    for (int i = 1; i <= n; ++i)
        for (int v : sg.path(i)) lg.add_role("P", i - 1, v);
    return lg;
}

LabeledGraph build_3far_ce(const Pattern& h, int n) {
    auto far = find_cycle_with_far_set(h.graph, 3, false);
    if (!far) throw PreconditionError("build_3far_ce: pattern lacks a cycle with three far vertices");
    if (n < h.graph.n() + 2) throw PreconditionError("build_3far_ce: n must be at least |h|+2");
    SemiGrid sg{n};
    auto sd = subdivide_all(h.graph, n);
    auto hedges = h.graph.edges();
    const auto& cyc = far->first;
    int uvidx = -1;
    for (size_t i = 0; i < hedges.size(); ++i)
        if (hedges[i].first == std::min(cyc[0], cyc[1]) && hedges[i].second == std::max(cyc[0], cyc[1]))
            uvidx = (int)i;
    const auto& uvchain = sd.chains[uvidx];  // n+2 vertices; internals map onto P_j

    LabeledGraph lg;
    lg.family = "3far";
    lg.params["n"] = n;
    lg.params["hn"] = h.graph.n();
    int fresh_per = sd.graph.n() - n;
    Graph g(sg.size() + n * fresh_per);
    for (int i = 1; i <= n; ++i) {
        auto p = sg.path(i);
        for (size_t t = 0; t + 1 < p.size(); ++t)
            if (!g.has_edge(p[t], p[t + 1])) g.add_edge(p[t], p[t + 1]);
    }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= i; ++j)
            for (int a = i; a <= n; ++a)
                for (int b = 1; b <= a; ++b) {
                    if (a == i && b <= j) continue;
                    bool share = (a == i || b == i || a == j || b == j);
                    if (!share && !g.has_edge(sg.id(i, j), sg.id(a, b)))
                        g.add_edge(sg.id(i, j), sg.id(a, b));
                }
    std::vector<std::vector<int>> maps(n, std::vector<int>(sd.graph.n(), -1));
    for (int e = 0; e < n; ++e) {
        auto pj = sg.path(e + 1);
        for (int t = 1; t <= n; ++t) maps[e][uvchain[t]] = pj[t - 1];
        int next = sg.size() + e * fresh_per;
        for (int w2 = 0; w2 < sd.graph.n(); ++w2)
            if (maps[e][w2] < 0) maps[e][w2] = next++;
        for (auto [x, y] : sd.graph.edges())
            if (!g.has_edge(maps[e][x], maps[e][y])) g.add_edge(maps[e][x], maps[e][y]);
    }
    // completion: fresh part of H_j versus everything outside H_j
    for (int e = 0; e < n; ++e) {
        VertexSet hj;
        for (int w2 = 0; w2 < sd.graph.n(); ++w2) hj.push_back(maps[e][w2]);
        hj = vset_sorted(std::move(hj));
        for (int w2 = 0; w2 < sd.graph.n(); ++w2) {
            int gv = maps[e][w2];
            if (gv < sg.size()) continue;  // identified with the semigrid path
            for (int ov = 0; ov < g.n(); ++ov) {
                if (vset_contains(hj, ov)) continue;
                if (!g.has_edge(gv, ov)) g.add_edge(gv, ov);
            }
        }
    }
    lg.graph = std::move(g);
    for (int i = 1; i <= n; ++i)
        for (int v : sg.path(i)) lg.add_role("P", i - 1, v);
    for (int e = 0; e < n; ++e)
        for (int w2 = 0; w2 < sd.graph.n(); ++w2)
            lg.add_role("copy", e * sd.graph.n() + w2, maps[e][w2]);
    return lg;
}

// ---- witnesses ----------------------------------------------------------------

namespace {

Pattern k2r_pattern(int r) {
    Graph g(2 + r);
    for (int t = 2; t < 2 + r; ++t) {
        g.add_edge(0, t);
        g.add_edge(1, t);
    }
    return {std::move(g), "custom"};
}

Model checked(const Graph& g, const Pattern& pat, Model m, const char* where) {
    auto res = verify_model(g, pat, m);
    if (!res) throw std::logic_error(std::string(where) + ": witness invalid: " + res.reason);
    return m;
}

Model k2r_witness(const LabeledGraph& lg, const VertexSet& x) {
    int r = lg.params.at("r"), n = lg.params.at("n");
    Wall w{r * n};
    int m = w.m;
    auto uapex = [&](int i) { return lg.role_at("u", i); };
    auto vapex = [&](int i) { return lg.role_at("v", i); };

    for (int i = 0; i < n; ++i) {
        int ii = n - 1 - i;
        if (vset_contains(x, uapex(i)) || vset_contains(x, vapex(i))) continue;
        bool middle = (i == ii);

        std::vector<int> cols_a(r), cols_b(r), avs(r), bvs(r);
        bool ends_ok = true;
        for (int j = 0; j < r; ++j) {
            int ta = i * r + j;
            int tb = i * r + (r - 1 - j);
            cols_a[j] = ta;
            cols_b[j] = w.b_col(tb);
            avs[j] = w.a(ta);
            bvs[j] = w.b(tb);
            if (vset_contains(x, avs[j]) || vset_contains(x, bvs[j])) ends_ok = false;
        }
        if (!ends_ok) continue;

        auto region_for = [&](int j, int rho) {
            std::vector<int> cells;
            if (middle) {
                w.column_cells(cols_a[j], 0, m - 1, true, cells);
            } else {
                w.column_cells(cols_a[j], 0, rho, true, cells);
                w.row_spine(rho, std::min(cols_a[j], cols_b[j]), std::max(cols_a[j], cols_b[j]),
                            cells);
                w.column_cells(cols_b[j], rho, m - 1, true, cells);
            }
            cells.push_back(avs[j]);
            cells.push_back(bvs[j]);
            return vset_minus(vset_sorted(std::move(cells)), x);
        };
        auto route = [&](int j, int rho) {
            return shortest_path_within(lg.graph, avs[j], bvs[j], region_for(j, rho));
        };

        std::vector<std::vector<int>> assignments;
        if (middle) {
            assignments.push_back({});
        } else {
            std::vector<int> xfree;
            for (int t = 1; t + 1 < m; ++t)
                if (w.row_untouched(t, x)) xfree.push_back(t);
            std::vector<std::vector<int>> feas(r);
            for (int j = 0; j < r; ++j)
                for (int t : xfree)
                    if (!route(j, t).empty()) feas[j].push_back(t);
            // monotone chains keep the crossing columns disjoint; which
            // direction works depends on the side the a block sits on
            for (bool desc : {true, false}) {
                std::vector<int> rows;
                int prev = desc ? m : -1;
                bool ok = true;
                for (int j = 0; j < r && ok; ++j) {
                    int pick = -1;
                    for (int t : feas[j])
                        if (desc ? (t < prev && (pick < 0 || t > pick)) : (t > prev)) {
                            pick = t;
                            if (!desc) break;
                        }
                    if (pick < 0)
                        ok = false;
                    else {
                        rows.push_back(pick);
                        prev = pick;
                    }
                }
                if (ok) assignments.push_back(std::move(rows));
            }
        }

        for (const auto& rows : assignments) {
            std::vector<std::vector<int>> routes;
            bool ok = true;
            for (int j = 0; j < r && ok; ++j) {
                auto rt = route(j, middle ? 0 : rows[j]);
                if (rt.empty())
                    ok = false;
                else
                    routes.push_back(std::move(rt));
            }
            if (!ok) continue;
            Model mm;
            mm.branch.resize(2 + r);
            mm.branch[0] = uapex(i);
            mm.branch[1] = vapex(i);
            for (int j = 0; j < r; ++j) mm.branch[2 + j] = routes[j].front();  // a vertices
            mm.edge_paths.resize(2 * r);
            for (int j = 0; j < r; ++j) {
                mm.edge_paths[j] = {uapex(i), routes[j].front()};
                std::vector<int> long_path = {vapex(i)};
                long_path.insert(long_path.end(), routes[j].rbegin(), routes[j].rend());
                mm.edge_paths[r + j] = std::move(long_path);
            }
            try {
                return checked(lg.graph, k2r_pattern(r), std::move(mm), "k2r_witness");
            } catch (const std::logic_error&) {
                continue;  // routing collided; try another assignment
            }
        }

        // fallback: sequential routing over the whole wall, walling off the
        // used vertices and their neighborhoods; handles removals that sever
        // a column ladder
        {
            std::vector<int> wall_cells;
            for (int c = 0; c < m; ++c) w.column_cells(c, 0, m - 1, false, wall_cells);
            VertexSet base = vset_minus(vset_sorted(std::move(wall_cells)), x);
            VertexSet endpoints;
            for (int j = 0; j < r; ++j) {
                endpoints.push_back(avs[j]);
                endpoints.push_back(bvs[j]);
            }
            endpoints = vset_sorted(std::move(endpoints));
            std::vector<std::vector<int>> orders;
            std::vector<int> idv(r);
            for (int j = 0; j < r; ++j) idv[j] = j;
            std::sort(idv.begin(), idv.end());
            do {
                orders.push_back(idv);
            } while (std::next_permutation(idv.begin(), idv.end()) && orders.size() < 24);
            for (const auto& order : orders) {
                VertexSet used;
                std::vector<std::vector<int>> routes(r);
                bool ok = true;
                for (int j : order) {
                    VertexSet blocked = vset_minus(endpoints, {avs[j], bvs[j]});
                    for (int v : used) blocked.push_back(v);
                    blocked = vset_sorted(std::move(blocked));
                    VertexSet allowed = vset_minus(base, blocked);
                    VertexSet shadow;
                    for (int v : blocked)
                        for (int nb : lg.graph.neighbors(v)) shadow.push_back(nb);
                    allowed = vset_minus(allowed, vset_sorted(std::move(shadow)));
                    allowed = vset_union(allowed, vset_minus(VertexSet{std::min(avs[j], bvs[j]),
                                                                       std::max(avs[j], bvs[j])},
                                                             x));
                    auto rt = shortest_path_within(lg.graph, avs[j], bvs[j], allowed);
                    if (rt.empty()) {
                        ok = false;
                        break;
                    }
                    routes[j] = rt;
                    for (int v : rt) used.push_back(v);
                    used = vset_sorted(std::move(used));
                }
                if (!ok) continue;
                Model mm;
                mm.branch.resize(2 + r);
                mm.branch[0] = uapex(i);
                mm.branch[1] = vapex(i);
                for (int j = 0; j < r; ++j) mm.branch[2 + j] = avs[j];
                mm.edge_paths.resize(2 * r);
                for (int j = 0; j < r; ++j) {
                    mm.edge_paths[j] = {uapex(i), avs[j]};
                    std::vector<int> long_path = {vapex(i)};
                    long_path.insert(long_path.end(), routes[j].rbegin(), routes[j].rend());
                    mm.edge_paths[r + j] = std::move(long_path);
                }
                try {
                    return checked(lg.graph, k2r_pattern(r), std::move(mm), "k2r_witness");
                } catch (const std::logic_error&) {
                    continue;
                }
            }
        }
    }
    throw PreconditionError("k2r_witness: no avoiding model found");
}

Model forest_witness(const LabeledGraph& lg, const Pattern& h, const VertexSet& x) {
    int n = lg.params.at("n");
    int hn = lg.params.at("hn");
    if (h.graph.n() != hn) throw PreconditionError("forest_witness: pattern mismatch");
    auto fs = split_forest(h.graph);
    Wall w{n};
    auto copy = [&](int i, int hv) { return lg.role_at("copy", i * hn + hv); };

    for (int i = 0; i < n; ++i) {
        bool blob_clear = true;
        for (int hv = 0; hv < hn && blob_clear; ++hv)
            if (vset_contains(x, copy(i, hv))) blob_clear = false;
        if (!blob_clear) continue;
        int col_a = i, col_b = w.b_col(i);
        int av = w.a(i), bv = w.b(i);
        if (vset_contains(x, av) || vset_contains(x, bv)) continue;

        std::vector<std::vector<int>> regions;
        if (col_a == col_b) {
            std::vector<int> cells;
            w.column_cells(col_a, 0, w.m - 1, false, cells);
            regions.push_back(std::move(cells));
        } else {
            for (int rho = 0; rho < w.m; ++rho) {
                if (!w.row_untouched(rho, x)) continue;
                std::vector<int> cells;
                w.column_cells(col_a, 0, rho, false, cells);
                w.row_spine(rho, std::min(col_a, col_b), std::max(col_a, col_b), cells);
                w.column_cells(col_b, rho, w.m - 1, false, cells);
                regions.push_back(std::move(cells));
            }
        }
        for (auto& cells : regions) {
            VertexSet allowed = vset_minus(vset_sorted(std::move(cells)), x);
            auto route = shortest_path_within(lg.graph, av, bv, allowed);
            if (route.empty()) continue;

            Model mm;
            mm.branch.resize(hn);
            for (int hv = 0; hv < hn; ++hv) mm.branch[hv] = copy(i, hv);
            for (auto [a, b] : h.graph.edges()) {
                if ((a == fs.v && b == fs.vp) || (a == fs.vp && b == fs.v)) {
                    std::vector<int> path = {copy(i, fs.v)};
                    path.insert(path.end(), route.begin(), route.end());
                    path.push_back(copy(i, fs.vp));
                    if (a == fs.vp) std::reverse(path.begin(), path.end());
                    mm.edge_paths.push_back(std::move(path));
                } else {
                    mm.edge_paths.push_back({copy(i, a), copy(i, b)});
                }
            }
            try {
                return checked(lg.graph, h, std::move(mm), "forest_witness");
            } catch (const std::logic_error&) {
                continue;
            }
        }
    }
    throw PreconditionError("forest_witness: no avoiding model found");
}

Model copy_family_witness(const LabeledGraph& lg, const Pattern& h, int copies, int sub_n,
                          const VertexSet& x, const char* where) {
    // hyper/semigrid: take an untouched canonical copy H_e
    int hn = lg.params.at("hn");
    if (h.graph.n() != hn) throw PreconditionError("witness: pattern mismatch");
    auto sd = subdivide_all(h.graph, sub_n);
    std::vector<int> copy_role(copies * sd.graph.n(), -1);
    for (const auto& [name, idx, v] : lg.roles)
        if (name == "copy" && idx < (int)copy_role.size()) copy_role[idx] = v;
    for (int e = 0; e < copies; ++e) {
        bool clear = true;
        std::vector<int> map(sd.graph.n());
        for (int w2 = 0; w2 < sd.graph.n() && clear; ++w2) {
            map[w2] = copy_role[e * sd.graph.n() + w2];
            if (map[w2] < 0) throw std::logic_error("witness: missing copy role");
            if (vset_contains(x, map[w2])) clear = false;
        }
        if (!clear) continue;
        Model mm;
        mm.branch.resize(hn);
        for (int hv = 0; hv < hn; ++hv) mm.branch[hv] = map[hv];
        for (const auto& chain : sd.chains) {
            std::vector<int> path;
            for (int w2 : chain) path.push_back(map[w2]);
            mm.edge_paths.push_back(std::move(path));
        }
        return checked(lg.graph, h, std::move(mm), where);
    }
    throw PreconditionError(std::string(where) + ": no untouched copy");
}

}  // namespace

Pattern family_pattern(const LabeledGraph& lg, const Pattern* h) {
    if (lg.family == "k2r") return k2r_pattern(lg.params.at("r"));
    if (!h) throw PreconditionError("family_pattern: this family needs its pattern");
    return *h;
}

Model witness_avoiding(const LabeledGraph& lg, const Pattern* h, const VertexSet& x) {
    // the family thresholds only promise success below them; larger removal
    // sets are still attempted and may well succeed
    auto rethrow = [&](const PreconditionError& e, long long threshold2x) -> Model {
        if (2 * (long long)x.size() > threshold2x)
            throw PreconditionError("witness_avoiding: threshold exceeded and no model found");
        throw e;
    };
    if (lg.family == "k2r") {
        int n = lg.params.at("n");
        try {
            return k2r_witness(lg, x);
        } catch (const PreconditionError& e) {
            return rethrow(e, n);
        }
    }
    if (lg.family == "forest") {
        if (!h) throw PreconditionError("witness_avoiding: forest family needs its pattern");
        int n = lg.params.at("n");
        try {
            return forest_witness(lg, *h, x);
        } catch (const PreconditionError& e) {
            return rethrow(e, n);
        }
    }
    if (lg.family == "hyper") {
        if (!h) throw PreconditionError("witness_avoiding: hyper family needs its pattern");
        int n = lg.params.at("n");
        auto hyper = ksubsets(2 * n - 1, n);
        try {
            return copy_family_witness(lg, *h, (int)hyper.size(), 2 * n - 1, x, "hyper_witness");
        } catch (const PreconditionError& e) {
            return rethrow(e, 2LL * n);
        }
    }
    if (lg.family == "3far") {
        if (!h) throw PreconditionError("witness_avoiding: semigrid family needs its pattern");
        int n = lg.params.at("n");
        try {
            return copy_family_witness(lg, *h, n, n, x, "semigrid_witness");
        } catch (const PreconditionError& e) {
            return rethrow(e, n);
        }
    }
    throw PreconditionError("witness_avoiding: unsupported family " + lg.family);
}

bool has_two_branch_vertices_in_component(const Graph& forest) {
    for (const auto& comp : components(forest)) {
        int cnt = 0;
        for (int v : comp)
            if (forest.degree(v) >= 3) ++cnt;
        if (cnt >= 2) return true;
    }
    return false;
}

}  // namespace pancover
