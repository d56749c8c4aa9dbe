#include "pancover/findmodel.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace pancover {

namespace {

struct Searcher {
    const Graph& g;
    const Graph& H;
    std::vector<std::pair<int, int>> hedges;
    std::vector<int> vorder;  // pattern vertices, high degree first
    long long budget;
    std::function<bool(const Model&)> visit;

    std::vector<int> branch;        // pattern vertex -> host vertex (-1 unset)
    std::vector<char> used;         // host vertices used by the partial model
    std::vector<char> path_block;   // host vertices the next interiors must avoid being adjacent to
    std::vector<std::vector<int>> paths;
    bool done = false;

    Searcher(const Graph& g_, const Graph& H_, long long budget_)
        : g(g_), H(H_), hedges(H_.edges()), budget(budget_), branch(H_.n(), -1), used(g_.n(), 0),
          path_block(g_.n(), 0) {
        vorder.resize(H.n());
        std::iota(vorder.begin(), vorder.end(), 0);
        std::stable_sort(vorder.begin(), vorder.end(),
                         [&](int a, int b) { return H.degree(a) > H.degree(b); });
    }

    void tick() {
        if (--budget < 0) throw BudgetExceeded("find_model: node budget exhausted");
    }

    void place_vertex(size_t idx) {
        if (done) return;
        if (idx == vorder.size()) {
            paths.assign(hedges.size(), {});
            for (int v = 0; v < g.n(); ++v) path_block[v] = 0;
            for (int b : branch) path_block[b] = 1;
            place_path(0);
            return;
        }
        int pv = vorder[idx];
        for (int cand = 0; cand < g.n() && !done; ++cand) {
            if (used[cand]) continue;
            tick();
            bool ok = true;
            for (size_t j = 0; j < idx && ok; ++j) {
                int w = vorder[j];
                if (!H.has_edge(pv, w) && g.has_edge(cand, branch[w])) ok = false;
            }
            if (!ok) continue;
            branch[pv] = cand;
            used[cand] = 1;
            place_vertex(idx + 1);
            used[cand] = 0;
            branch[pv] = -1;
        }
    }

    void place_path(size_t ei) {
        if (done) return;
        if (ei == hedges.size()) {
            Model m;
            m.branch = branch;
            m.edge_paths = paths;
            if (visit(m)) done = true;
            return;
        }
        auto [u, v] = hedges[ei];
        int a = branch[u], b = branch[v];
        // endpoints are exempt from the foreign-adjacency block for this path
        path_block[a] = 0;
        path_block[b] = 0;
        std::vector<int>& p = paths[ei];
        p = {a};
        extend_path(ei, b);
        p.clear();
        path_block[a] = 1;
        path_block[b] = 1;
    }

    void extend_path(size_t ei, int target) {
        if (done) return;
        std::vector<int>& p = paths[ei];
        int tip = p.back();
        for (int x : g.neighbors(tip)) {
            if (done) return;
            tick();
            if (x == target) {
                bool ok = true;
                for (size_t i = 0; i + 1 < p.size() && ok; ++i)
                    if (g.has_edge(target, p[i])) ok = false;
                if (!ok) continue;
                p.push_back(target);
                close_path(ei);
                p.pop_back();
                continue;
            }
            if (used[x]) continue;
            bool ok = true;
            for (size_t i = 0; i + 1 < p.size() && ok; ++i)
                if (g.has_edge(x, p[i])) ok = false;
            if (!ok) continue;
            for (int w : g.neighbors(x))
                if (path_block[w]) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            p.push_back(x);
            used[x] = 1;
            extend_path(ei, target);
            used[x] = 0;
            p.pop_back();
        }
    }

    void close_path(size_t ei) {
        auto [u, v] = hedges[ei];
        int a = branch[u], b = branch[v];
        const std::vector<int>& p = paths[ei];
        // freeze interiors into the block set, restore endpoints
        for (size_t i = 1; i + 1 < p.size(); ++i) path_block[p[i]] = 1;
        path_block[a] = 1;
        path_block[b] = 1;
        place_path(ei + 1);
        path_block[a] = 0;
        path_block[b] = 0;
        for (size_t i = 1; i + 1 < p.size(); ++i) path_block[p[i]] = 0;
    }
};

std::optional<Model> search(const Graph& g, const Pattern& h, long long budget, bool spanning) {
    if (h.graph.n() > g.n()) return std::nullopt;
    Searcher s(g, h.graph, budget);
    std::optional<Model> out;
    s.visit = [&](const Model& m) {
        if (spanning && (int)m.vertex_set().size() != g.n()) return false;
        out = m;
        return true;
    };
    s.place_vertex(0);
    return out;
}

}  // namespace

std::optional<Model> find_model(const Graph& g, const Pattern& h, long long budget) {
    return search(g, h, budget, false);
}

std::optional<Model> find_spanning_model(const Graph& g, const Pattern& h, long long budget) {
    return search(g, h, budget, true);
}

}  // namespace pancover
