#include "pancover/gallai.hpp"

#include <algorithm>

#include "pancover/matching.hpp"

namespace pancover {

namespace {

// Gallai auxiliary graph: one node per A-vertex, two per outside vertex.
struct AuxGraph {
    Graph aux;
    std::vector<int> node_of_a;          // g vertex -> aux node (A only)
    std::vector<std::array<int, 2>> nd;  // g vertex -> the two copies (-1,-1 for A)
    std::vector<int> owner;              // aux node -> g vertex
    int q = 0;                           // |V \ A|

    AuxGraph(const Graph& g, const VertexSet& a) {
        std::vector<char> in_a(g.n(), 0);
        for (int v : a) in_a[v] = 1;
        node_of_a.assign(g.n(), -1);
        nd.assign(g.n(), {-1, -1});
        int id = 0;
        for (int v : a) node_of_a[v] = id++;
        for (int v = 0; v < g.n(); ++v)
            if (!in_a[v]) {
                nd[v] = {id, id + 1};
                id += 2;
                ++q;
            }
        aux = Graph(id);
        owner.assign(id, -1);
        for (int v = 0; v < g.n(); ++v) {
            if (in_a[v])
                owner[node_of_a[v]] = v;
            else {
                owner[nd[v][0]] = v;
                owner[nd[v][1]] = v;
                aux.add_edge(nd[v][0], nd[v][1]);
            }
        }
        for (auto [u, v] : g.edges()) {
            bool au = in_a[u], av = in_a[v];
            if (au && av)
                aux.add_edge(node_of_a[u], node_of_a[v]);
            else if (au)
                for (int t : {0, 1}) aux.add_edge(node_of_a[u], nd[v][t]);
            else if (av)
                for (int t : {0, 1}) aux.add_edge(node_of_a[v], nd[u][t]);
            else
                for (int t : {0, 1}) aux.add_edge(nd[u][t], nd[v][t]);
        }
    }

    bool is_double(int x, int y) const {
        return owner[x] == owner[y];
    }
};

}  // namespace

int max_apath_packing_size(const Graph& g, const VertexSet& a) {
    AuxGraph ax(g, a);
    auto mate = max_matching(ax.aux);
    return matching_size(mate) - ax.q;
}

std::vector<std::vector<int>> max_apath_packing(const Graph& g, const VertexSet& a) {
    AuxGraph ax(g, a);
    auto mate = max_matching(ax.aux);
    int nu = matching_size(mate) - ax.q;

    // Normalize: every outside vertex is either double-matched or has both
    // copies matched to other nodes.
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < g.n(); ++v) {
            if (ax.nd[v][0] < 0) continue;
            int c0 = ax.nd[v][0], c1 = ax.nd[v][1];
            if (mate[c0] == c1) continue;
            bool m0 = mate[c0] != -1, m1 = mate[c1] != -1;
            if (m0 && m1) continue;
            if (!m0 && !m1) throw std::logic_error("gallai: matching not maximum");
            int used_copy = m0 ? c0 : c1;
            int partner = mate[used_copy];
            mate[partner] = -1;
            mate[c0] = c1;
            mate[c1] = c0;
            changed = true;
        }
    }

    // Project matched non-double edges back to g and walk path components.
    std::vector<std::vector<std::pair<int, int>>> inc(g.n());  // (nbr, edge id)
    std::vector<std::pair<int, int>> pedges;
    for (int x = 0; x < ax.aux.n(); ++x) {
        int y = mate[x];
        if (y < 0 || y < x) continue;
        if (ax.is_double(x, y)) continue;
        int u = ax.owner[x], v = ax.owner[y];
        int id = (int)pedges.size();
        pedges.push_back({u, v});
        inc[u].push_back({v, id});
        inc[v].push_back({u, id});
    }
    std::vector<char> edge_used(pedges.size(), 0);
    std::vector<std::vector<int>> paths;
    for (int s : a) {
        if (inc[s].size() != 1) continue;  // path endpoints have projected degree 1
        if (edge_used[inc[s][0].second]) continue;
        std::vector<int> path = {s};
        int prev_edge = -1, cur = s;
        while (true) {
            int step = -1, step_edge = -1;
            for (auto [w, id] : inc[cur])
                if (!edge_used[id] && id != prev_edge) {
                    step = w;
                    step_edge = id;
                    break;
                }
            if (step < 0) break;
            edge_used[step_edge] = 1;
            prev_edge = step_edge;
            path.push_back(step);
            cur = step;
            if (vset_contains(a, cur)) break;
        }
        paths.push_back(std::move(path));
    }
    if ((int)paths.size() != nu) throw std::logic_error("gallai: path extraction mismatch");
    return paths;
}

bool apath_cover_valid(const Graph& g, const VertexSet& a, const VertexSet& x) {
    auto sub = remove_vertices(g, x);
    VertexSet alive_a = vset_minus(a, x);
    for (const auto& comp : components(sub.graph)) {
        int cnt = 0;
        for (int v : comp)
            if (vset_contains(alive_a, sub.to_orig[v])) ++cnt;
        if (cnt > 1) return false;
    }
    return true;
}

GallaiResult gallai_apaths(const Graph& g, const VertexSet& a, int k) {
    auto packing = max_apath_packing(g, a);
    if ((int)packing.size() >= k) {
        packing.resize(k);
        return {true, std::move(packing), {}};
    }

    // Cover extraction: peel vertices whose deletion drops the packing number,
    // then trim A inside each component. Realizes Gallai's min-max bound 2*nu.
    VertexSet cover;
    Graph cur = g;
    std::vector<int> orig(g.n());
    for (int i = 0; i < g.n(); ++i) orig[i] = i;
    VertexSet cur_a = a;
    int nu = (int)packing.size();
    auto cur_packing = packing;
    while (nu > 0) {
        int pick = -1;
        VertexSet cand;
        for (auto& p : cur_packing)
            for (int v : p) cand.push_back(v);
        cand = vset_sorted(std::move(cand));
        for (int v : cand) {
            auto sub = remove_vertices(cur, {v});
            VertexSet suba;
            for (int w : cur_a)
                if (w != v) suba.push_back((int)(std::lower_bound(sub.to_orig.begin(), sub.to_orig.end(), w) - sub.to_orig.begin()));
            if (max_apath_packing_size(sub.graph, suba) == nu - 1) {
                pick = v;
                break;
            }
        }
        if (pick < 0) break;
        cover.push_back(orig[pick]);
        auto sub = remove_vertices(cur, {pick});
        std::vector<int> norig(sub.graph.n());
        for (int i = 0; i < sub.graph.n(); ++i) norig[i] = orig[sub.to_orig[i]];
        VertexSet na;
        for (int w : cur_a)
            if (w != pick) na.push_back((int)(std::lower_bound(sub.to_orig.begin(), sub.to_orig.end(), w) - sub.to_orig.begin()));
        cur = std::move(sub.graph);
        orig = std::move(norig);
        cur_a = std::move(na);
        --nu;
        cur_packing = max_apath_packing(cur, cur_a);
        if ((int)cur_packing.size() != nu) throw std::logic_error("gallai: cover extraction failed");
    }
    // residual: the empty set minimizes; trim A per component
    int check = 0;
    for (const auto& comp : components(cur)) {
        VertexSet ak = vset_intersect(comp, cur_a);
        check += (int)ak.size() / 2;
        if (ak.size() >= 2)
            for (size_t i = 0; i + 1 < ak.size(); ++i) cover.push_back(orig[ak[i]]);
    }
    if (check != nu) throw std::logic_error("gallai: cover extraction failed");
    cover = vset_sorted(std::move(cover));
    if ((int)cover.size() > 2 * k - 2 || !apath_cover_valid(g, a, cover))
        throw std::logic_error("gallai: cover extraction failed");
    return {false, {}, std::move(cover)};
}

}  // namespace pancover
