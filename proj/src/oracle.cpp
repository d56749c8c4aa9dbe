#include "pancover/oracle.hpp"

#include <algorithm>
#include <functional>

#include "pancover/findmodel.hpp"
#include "pancover/policy.hpp"

namespace pancover {

namespace {

struct Budget {
    long long left;
    void tick() {
        if (--left < 0) throw BudgetExceeded("oracle: search budget exhausted");
    }
};

// All vertex sets spanning an induced subdivision of the pattern.
std::vector<VertexSet> model_sets(const Graph& g, const Pattern& h, Budget& budget) {
    if (g.n() > 24) throw BudgetExceeded("oracle: graph too large for subset enumeration");
    std::vector<VertexSet> family;
    int min_size = h.graph.n();
    for (uint32_t mask = 0; mask < (1u << g.n()); ++mask) {
        if (__builtin_popcount(mask) < min_size) continue;
        budget.tick();
        VertexSet s;
        for (int v = 0; v < g.n(); ++v)
            if (mask >> v & 1) s.push_back(v);
        auto sub = induced_subgraph(g, s);
        bool is_model;
        if (h.name == "pan1")
            is_model = is_pan_subdivision_graph(sub.graph, 1);
        else if (h.name == "pan2")
            is_model = is_pan_subdivision_graph(sub.graph, 2);
        else if (h.name == "diamond")
            is_model = is_diamond_subdivision_graph(sub.graph);
        else
            is_model = find_spanning_model(sub.graph, h, budget.left).has_value();
        if (is_model) family.push_back(std::move(s));
    }
    return family;
}

// Maximum disjoint subfamily, branching on the smallest undecided vertex.
struct PackSearch {
    const std::vector<VertexSet>& family;
    int n;
    Budget& budget;
    std::vector<std::vector<size_t>> at_min;  // sets indexed by their minimum
    std::vector<char> used;
    std::vector<size_t> current, best_sel;
    int best = 0;

    PackSearch(const std::vector<VertexSet>& f, int n_, Budget& b)
        : family(f), n(n_), budget(b), at_min(n_), used(n_, 0) {
        for (size_t i = 0; i < family.size(); ++i) at_min[family[i].front()].push_back(i);
    }

    void rec(int v, int count) {
        budget.tick();
        if (v == n) {
            if (count > best) {
                best = count;
                best_sel = current;
            }
            return;
        }
        if (used[v]) {
            rec(v + 1, count);
            return;
        }
        for (size_t i : at_min[v]) {
            bool free = true;
            for (int x : family[i])
                if (used[x]) {
                    free = false;
                    break;
                }
            if (!free) continue;
            for (int x : family[i]) used[x] = 1;
            current.push_back(i);
            rec(v + 1, count + 1);
            current.pop_back();
            for (int x : family[i]) used[x] = 0;
        }
        used[v] = 1;  // v stays outside the packing
        rec(v + 1, count);
        used[v] = 0;
    }
};

bool cover_search(const std::vector<VertexSet>& family, VertexSet& x, int depth, Budget& budget) {
    budget.tick();
    const VertexSet* uncovered = nullptr;
    for (const auto& s : family)
        if (vsets_disjoint(s, x)) {
            uncovered = &s;
            break;
        }
    if (!uncovered) return true;
    if (depth == 0) return false;
    for (int v : *uncovered) {
        x.push_back(v);
        std::sort(x.begin(), x.end());
        if (cover_search(family, x, depth - 1, budget)) return true;
        x.erase(std::find(x.begin(), x.end(), v));
    }
    return false;
}

}  // namespace

DualityReport duality_report(const Graph& g, const Pattern& h, const OracleOptions& opt) {
    Budget budget{opt.budget};
    auto family = model_sets(g, h, budget);
    DualityReport rep;
    PackSearch ps(family, g.n(), budget);
    ps.rec(0, 0);
    rep.nu = ps.best;
    for (size_t i : ps.best_sel) rep.nu_witness.push_back(family[i]);
    for (int s = 0;; ++s) {
        VertexSet x;
        if (cover_search(family, x, s, budget)) {
            rep.tau = s;
            rep.tau_witness = std::move(x);
            break;
        }
    }
    rep.nodes = opt.budget - budget.left;
    if (rep.tau < rep.nu) throw std::logic_error("oracle: weak duality violated");
    return rep;
}

DualityReport nu_exact(const Graph& g, const Pattern& h, const OracleOptions& opt) {
    Budget budget{opt.budget};
    auto family = model_sets(g, h, budget);
    DualityReport rep;
    PackSearch ps(family, g.n(), budget);
    ps.rec(0, 0);
    rep.nu = ps.best;
    for (size_t i : ps.best_sel) rep.nu_witness.push_back(family[i]);
    rep.tau = -1;
    rep.nodes = opt.budget - budget.left;
    return rep;
}

DualityReport tau_exact(const Graph& g, const Pattern& h, const OracleOptions& opt) {
    Budget budget{opt.budget};
    auto family = model_sets(g, h, budget);
    DualityReport rep;
    for (int s = 0;; ++s) {
        VertexSet x;
        if (cover_search(family, x, s, budget)) {
            rep.tau = s;
            rep.tau_witness = std::move(x);
            break;
        }
    }
    rep.nu = -1;
    rep.nodes = opt.budget - budget.left;
    return rep;
}

bool is_star_forest_pattern(const Pattern& h) {
    for (const auto& comp : components(h.graph)) {
        int big = 0;
        for (int v : comp)
            if (h.graph.degree(v) > 2) ++big;
        if (big > 1) return false;
    }
    return true;
}

namespace {

// Exact induced copy of h in g (adjacency-preserving and -reflecting).
std::optional<std::vector<int>> find_induced_copy(const Graph& g, const Graph& h, Budget& budget) {
    std::vector<int> order(h.n());
    for (int i = 0; i < h.n(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return h.degree(a) > h.degree(b); });
    std::vector<int> image(h.n(), -1);
    std::vector<char> used(g.n(), 0);
    std::function<bool(size_t)> rec = [&](size_t idx) -> bool {
        if (idx == order.size()) return true;
        int hv = order[idx];
        for (int cand = 0; cand < g.n(); ++cand) {
            if (used[cand]) continue;
            budget.tick();
            bool ok = true;
            for (size_t j = 0; j < idx && ok; ++j) {
                int other = order[j];
                if (h.has_edge(hv, other) != g.has_edge(cand, image[other])) ok = false;
            }
            if (!ok) continue;
            image[hv] = cand;
            used[cand] = 1;
            if (rec(idx + 1)) return true;
            used[cand] = 0;
            image[hv] = -1;
        }
        return false;
    };
    if (rec(0)) return image;
    return std::nullopt;
}

}  // namespace

Certificate solve_star_forest(const Graph& g, const Pattern& h, int k, const OracleOptions& opt) {
    if (!is_star_forest_pattern(h))
        throw PreconditionError("solve_star_forest: components must be paths or subdivided stars");
    if (k < 1) throw std::invalid_argument("solve_star_forest: k must be positive");
    Budget budget{opt.budget};
    std::vector<VertexSet> copies;
    VertexSet removed;
    while ((int)copies.size() < k) {
        auto sub = remove_vertices(g, removed);
        auto img = find_induced_copy(sub.graph, h.graph, budget);
        if (!img) break;
        VertexSet verts;
        for (int v : *img) verts.push_back(sub.to_orig[v]);
        verts = vset_sorted(std::move(verts));
        removed = vset_union(removed, verts);
        copies.push_back(std::move(verts));
    }
    std::string echo = ThresholdPolicy{}.echo(k);
    if ((int)copies.size() >= k) return Certificate::packing("custom", std::move(copies), echo);
    VertexSet cover;
    for (const auto& c : copies) cover = vset_union(cover, c);
    return Certificate::cover_of("custom", std::move(cover), echo);
}

}  // namespace pancover
