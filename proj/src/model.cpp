#include "pancover/model.hpp"

#include <algorithm>

#include "pancover/blocks.hpp"

namespace pancover {

VertexSet Model::vertex_set() const {
    std::vector<int> v(branch);
    for (auto& p : edge_paths) v.insert(v.end(), p.begin(), p.end());
    return vset_sorted(std::move(v));
}

VerifyResult verify_model(const Graph& g, const Pattern& h, const Model& m) {
    const Graph& H = h.graph;
    auto hedges = H.edges();
    if ((int)m.branch.size() != H.n()) return {false, "branch map size mismatch"};
    if (m.edge_paths.size() != hedges.size()) return {false, "edge path count mismatch"};
    for (int v : m.branch)
        if (v < 0 || v >= g.n()) return {false, "branch vertex out of range"};
    VertexSet bset = vset_sorted(m.branch);
    if ((int)bset.size() != H.n()) return {false, "branch map not injective"};

    std::vector<VertexSet> interior(hedges.size());
    for (size_t i = 0; i < hedges.size(); ++i) {
        auto [u, v] = hedges[i];
        const auto& p = m.edge_paths[i];
        if (p.size() < 2) return {false, "edge path too short"};
        if (p.front() != m.branch[u] || p.back() != m.branch[v])
            return {false, "edge path endpoints do not match branch images"};
        for (int x : p)
            if (x < 0 || x >= g.n()) return {false, "path vertex out of range"};
        if (!is_induced_path_of(g, p)) return {false, "edge path not an induced path"};
        interior[i] = vset_sorted(std::vector<int>(p.begin() + 1, p.end() - 1));
        if (!vsets_disjoint(interior[i], bset)) return {false, "path interior meets a branch vertex"};
    }
    for (size_t i = 0; i < hedges.size(); ++i)
        for (size_t j = i + 1; j < hedges.size(); ++j) {
            if (!vsets_disjoint(interior[i], interior[j]))
                return {false, "interiors of two edge paths intersect"};
            for (int x : interior[i])
                for (int y : interior[j])
                    if (g.has_edge(x, y)) return {false, "edge between interiors of two edge paths"};
        }
    for (size_t i = 0; i < hedges.size(); ++i) {
        auto [u, v] = hedges[i];
        for (int w = 0; w < H.n(); ++w) {
            if (w == u || w == v) continue;
            for (int x : interior[i])
                if (g.has_edge(m.branch[w], x))
                    return {false, "branch vertex adjacent to interior of a foreign edge path"};
        }
    }
    for (int u = 0; u < H.n(); ++u)
        for (int v = u + 1; v < H.n(); ++v)
            if (!H.has_edge(u, v) && g.has_edge(m.branch[u], m.branch[v]))
                return {false, "images of non-adjacent pattern vertices are adjacent"};
    return {true, ""};
}

Model PanSubdivision::to_model() const {
    int p = (int)tail.size();
    Model m;
    m.branch.resize(p + 3);
    for (int i = 0; i < p; ++i) m.branch[i] = tail[i];
    m.branch[p] = cycle[0];
    m.branch[p + 1] = cycle[1];
    m.branch[p + 2] = cycle.back();
    // pattern edges sorted: tail chain, (p-1,p), (p,p+1), (p,p+2), (p+1,p+2)
    for (int i = 0; i + 1 < p; ++i) m.edge_paths.push_back({tail[i], tail[i + 1]});
    m.edge_paths.push_back({tail[p - 1], cycle[0]});
    m.edge_paths.push_back({cycle[0], cycle[1]});
    m.edge_paths.push_back({cycle[0], cycle.back()});
    m.edge_paths.push_back(std::vector<int>(cycle.begin() + 1, cycle.end()));
    return m;
}

Model diamond_model_from_paths(const std::vector<int>& p1, const std::vector<int>& p2,
                               const std::vector<int>& p3) {
    std::vector<const std::vector<int>*> ps = {&p1, &p2, &p3};
    // the direct 0-1 edge gets a length-one path when one exists
    std::stable_sort(ps.begin(), ps.end(),
                     [](auto* a, auto* b) { return a->size() < b->size(); });
    const auto& a = *ps[0];
    const auto& b = *ps[1];
    const auto& c = *ps[2];
    if (b.size() < 3 || c.size() < 3) throw PreconditionError("theta with two short paths");
    Model m;
    int x = a.front(), y = a.back();
    m.branch = {x, y, b[1], c[1]};
    // diamond pattern edges sorted: (0,1),(0,2),(0,3),(1,2),(1,3)
    m.edge_paths.resize(5);
    m.edge_paths[0] = a;
    m.edge_paths[1] = {x, b[1]};
    m.edge_paths[2] = {x, c[1]};
    m.edge_paths[3] = std::vector<int>(b.rbegin(), b.rend() - 1);  // y .. b[1]
    m.edge_paths[4] = std::vector<int>(c.rbegin(), c.rend() - 1);
    return m;
}

bool is_pan_subdivision_graph(const Graph& g, int p) {
    if (g.n() < p + 3) return false;
    if (!is_connected(g)) return false;
    int d1 = -1, d3 = -1;
    for (int v = 0; v < g.n(); ++v) {
        int d = g.degree(v);
        if (d == 1) {
            if (d1 >= 0) return false;
            d1 = v;
        } else if (d == 3) {
            if (d3 >= 0) return false;
            d3 = v;
        } else if (d != 2) {
            return false;
        }
    }
    if (d1 < 0 || d3 < 0) return false;
    // pendant tail: walk from the degree-1 end to the branch vertex
    int prev = -1, cur = d1, len = 0;
    while (cur != d3) {
        int nxt = -1;
        for (int w : g.neighbors(cur))
            if (w != prev) nxt = w;
        prev = cur;
        cur = nxt;
        ++len;
    }
    return len >= p;
}

bool is_diamond_subdivision_graph(const Graph& g) {
    if (g.n() < 4) return false;
    if (!is_connected(g)) return false;
    int deg3 = 0;
    for (int v = 0; v < g.n(); ++v) {
        int d = g.degree(v);
        if (d == 3)
            ++deg3;
        else if (d != 2)
            return false;
    }
    if (deg3 != 2) return false;
    auto bct = blocks(g);
    return bct.blocks.size() == 1 && (int)bct.blocks[0].size() == g.n();
}

std::vector<std::vector<int>> theta_paths(const Graph& g) {
    int b1 = -1, b2 = -1;
    for (int v = 0; v < g.n(); ++v)
        if (g.degree(v) == 3) (b1 < 0 ? b1 : b2) = v;
    std::vector<std::vector<int>> out;
    for (int s : g.neighbors(b1)) {
        std::vector<int> path = {b1};
        int prev = b1, cur = s;
        while (cur != b2) {
            path.push_back(cur);
            int nxt = -1;
            for (int w : g.neighbors(cur))
                if (w != prev) nxt = w;
            prev = cur;
            cur = nxt;
        }
        path.push_back(b2);
        out.push_back(std::move(path));
    }
    return out;
}

}  // namespace pancover
