#include "pancover/pansolver.hpp"

#include <algorithm>

#include "pancover/gallai.hpp"
#include "pancover/simonovits.hpp"

namespace pancover {

VertexSet cycle_dominators(const Graph& g, const std::vector<int>& c) {
    VertexSet cs = vset_sorted(c);
    VertexSet out;
    for (int v = 0; v < g.n(); ++v) {
        if (vset_contains(cs, v)) continue;
        bool all = true;
        for (int x : c)
            if (!g.has_edge(v, x)) {
                all = false;
                break;
            }
        if (all) out.push_back(v);
    }
    return out;
}

namespace {

// Keeps a subfamily of V(C)-paths whose endpoints are pairwise at C-distance
// at least `gap+1`, sweeping in ascending order of the smaller endpoint
// position; each kept path discards at most 4*gap others.
std::vector<std::vector<int>> thin_paths(const std::vector<std::vector<int>>& paths,
                                         const std::vector<int>& pos_of, int m, int gap) {
    std::vector<size_t> order(paths.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        auto key = [&](size_t i) {
            return std::min(pos_of[paths[i].front()], pos_of[paths[i].back()]);
        };
        return key(a) < key(b);
    });
    std::vector<char> blocked(m, 0);
    std::vector<std::vector<int>> kept;
    for (size_t i : order) {
        int pa = pos_of[paths[i].front()], pb = pos_of[paths[i].back()];
        if (blocked[pa] || blocked[pb]) continue;
        kept.push_back(paths[i]);
        for (int d = -gap; d <= gap; ++d) {
            blocked[((pa + d) % m + m) % m] = 1;
            blocked[((pb + d) % m + m) % m] = 1;
        }
    }
    return kept;
}

MultiGraph union_graph(int n, const std::vector<int>& cycle,
                       const std::vector<std::vector<int>>& paths) {
    MultiGraph h(n);
    for (size_t i = 0; i < cycle.size(); ++i)
        h.add_edge(cycle[i], cycle[(i + 1) % cycle.size()]);
    for (const auto& p : paths)
        for (size_t i = 0; i + 1 < p.size(); ++i) h.add_edge(p[i], p[i + 1]);
    return h;
}

void assert_disjoint_pans(const std::vector<PanSubdivision>& pans, const char* where) {
    for (size_t i = 0; i < pans.size(); ++i)
        for (size_t j = i + 1; j < pans.size(); ++j)
            if (!vsets_disjoint(pans[i].vertex_set(), pans[j].vertex_set()))
                throw std::logic_error(std::string(where) + ": extracted pans overlap");
}

}  // namespace

std::vector<PanSubdivision> pack_pan1_from_apaths(const Graph& g, const PanSubdivision& h,
                                                  const std::vector<std::vector<int>>& paths,
                                                  int k, const ThresholdPolicy& policy) {
    const auto& C = h.cycle;
    int m = (int)C.size();
    if (m < 5) throw PreconditionError("pack_pan1_from_apaths: cycle shorter than 5");
    if ((long long)paths.size() < policy.apaths1(k))
        throw PreconditionError("pack_pan1_from_apaths: too few paths");
    if (k == 1) return {h};

    std::vector<int> pos(g.n(), -1);
    for (int i = 0; i < m; ++i) pos[C[i]] = i;
    auto kept = thin_paths(paths, pos, m, 2);
    if (9 * (long long)kept.size() < (long long)paths.size())
        throw std::logic_error("pack_pan1_from_apaths: thinning exhausted");

    auto cycles = simonovits_pack(union_graph(g.n(), C, kept), k, policy);
    Graph marked(g.n());
    for (int i = 0; i < m; ++i) marked.add_edge(C[i], C[(i + 1) % m]);

    std::vector<PanSubdivision> pans;
    for (auto& z : cycles) {
        auto u = induced_cycle_keeping_marked_edge(g, z, marked);
        int len = (int)u.size();
        int at = -1;
        for (int i = 0; i < len; ++i) {
            int prev = u[(i - 1 + len) % len], cur = u[i], nxt = u[(i + 1) % len];
            if (!marked.has_edge(prev, cur) && marked.has_edge(cur, nxt)) {
                at = i;
                break;
            }
        }
        if (at < 0) throw std::logic_error("pack_pan1_from_apaths: no arc boundary on a cycle");
        int a0 = u[at], a1 = u[(at + 1) % len];
        int q = C[((pos[a0] + 1) % m)] == a1 ? C[(pos[a0] - 1 + m) % m] : C[(pos[a0] + 1) % m];
        // relabel the cycle as (nxt, a1, a0, prev, ...) so q attaches at position 2
        std::vector<int> relab;
        for (int t = 0; t < len; ++t) relab.push_back(u[((at + 2 - t) % len + len) % len]);
        pans.push_back(extract_pan1(g, relab, q));
    }
    assert_disjoint_pans(pans, "pack_pan1_from_apaths");
    return pans;
}

std::vector<PanSubdivision> pack_pan2_from_apaths(const Graph& g, const PanSubdivision& h,
                                                  const std::vector<std::vector<int>>& paths,
                                                  int k, const ThresholdPolicy& policy) {
    const auto& C = h.cycle;
    int m = (int)C.size();
    if (m < 11) throw PreconditionError("pack_pan2_from_apaths: cycle shorter than 11");
    if ((long long)paths.size() < policy.apaths2(k))
        throw PreconditionError("pack_pan2_from_apaths: too few paths");
    if (!cycle_dominators(g, C).empty())
        throw PreconditionError("pack_pan2_from_apaths: dominators not excluded by caller");
    if (k == 1) return {h};

    std::vector<int> pos(g.n(), -1);
    for (int i = 0; i < m; ++i) pos[C[i]] = i;
    auto kept = thin_paths(paths, pos, m, 8);
    if (33 * (long long)kept.size() < (long long)paths.size())
        throw std::logic_error("pack_pan2_from_apaths: thinning exhausted");

    auto cycles = simonovits_pack(union_graph(g.n(), C, kept), k, policy);
    Graph marked(g.n());
    for (int i = 0; i < m; ++i) marked.add_edge(C[i], C[(i + 1) % m]);

    std::vector<std::vector<int>> reduced;
    std::vector<int> cyc_at(m, -1);
    for (auto& z : cycles) {
        reduced.push_back(induced_cycle_keeping_marked_edge(g, z, marked));
        for (int v : reduced.back())
            if (pos[v] >= 0) cyc_at[pos[v]] = (int)reduced.size() - 1;
    }

    std::vector<PanSubdivision> pans;
    for (size_t ci = 0; ci < reduced.size(); ++ci) {
        const auto& u = reduced[ci];
        int len = (int)u.size();
        // boundary position whose clockwise gap leads to a different cycle
        int bpos = -1, gap = 0;
        for (int i = 0; i < len && bpos < 0; ++i) {
            if (pos[u[i]] < 0) continue;
            int p0 = pos[u[i]];
            for (int step = 1; step < m; ++step) {
                int at = cyc_at[(p0 + step) % m];
                if (at < 0) continue;
                if (at != (int)ci && step >= 5) {
                    bpos = p0;
                    gap = step;
                }
                break;
            }
        }
        if (bpos < 0) throw std::logic_error("pack_pan2_from_apaths: no usable gap");
        (void)gap;
        int b = C[bpos];
        int ib = -1;
        for (int i = 0; i < len; ++i)
            if (u[i] == b) ib = i;
        int dir = marked.has_edge(b, u[(ib + 1) % len]) ? 1 : -1;
        if (dir == -1 && !marked.has_edge(b, u[(ib - 1 + len) % len]))
            throw std::logic_error("pack_pan2_from_apaths: boundary without a cycle edge");
        // relabeled cycle (a, b, c, d, ...): a is b's path-side neighbor
        std::vector<int> relab;
        for (int t = 0; t < len; ++t) relab.push_back(u[((ib - dir + (long long)dir * t) % len + len) % len]);
        std::vector<int> w;
        for (int t = 1; t <= 4; ++t) w.push_back(C[(bpos + t) % m]);
        pans.push_back(extract_pan2(g, relab, w));
    }
    assert_disjoint_pans(pans, "pack_pan2_from_apaths");
    return pans;
}

namespace {

struct Layer {
    VertexSet alive;     // original ids of G_j
    PanSubdivision pan;  // original ids
};

std::vector<int> map_to_local(const std::vector<int>& orig_ids, const std::vector<int>& to_orig) {
    std::vector<int> out;
    out.reserve(orig_ids.size());
    for (int v : orig_ids) {
        auto it = std::lower_bound(to_orig.begin(), to_orig.end(), v);
        if (it == to_orig.end() || *it != v) throw std::logic_error("map_to_local: vertex vanished");
        out.push_back((int)(it - to_orig.begin()));
    }
    return out;
}

std::vector<int> map_to_orig(const std::vector<int>& local_ids, const std::vector<int>& to_orig) {
    std::vector<int> out;
    out.reserve(local_ids.size());
    for (int v : local_ids) out.push_back(to_orig[v]);
    return out;
}

}  // namespace

Certificate solve_pan(const Graph& g, int p, int k, const ThresholdPolicy& policy) {
    if (p != 1 && p != 2) throw std::invalid_argument("solve_pan: p must be 1 or 2");
    if (k < 1) throw std::invalid_argument("solve_pan: k must be positive");
    std::string pname = p == 1 ? "pan1" : "pan2";
    std::string echo = policy.echo(k);

    // peeling sequence of minimum pans
    std::vector<Layer> layers;
    VertexSet alive(g.n());
    for (int i = 0; i < g.n(); ++i) alive[i] = i;
    while ((int)layers.size() < k) {
        auto sub = induced_subgraph(g, alive);
        auto pan = find_min_pan(sub.graph, p);
        if (!pan) break;
        PanSubdivision oro;
        oro.tail = map_to_orig(pan->tail, sub.to_orig);
        oro.cycle = map_to_orig(pan->cycle, sub.to_orig);
        layers.push_back({alive, oro});
        alive = vset_minus(alive, oro.vertex_set());
    }
    if ((int)layers.size() >= k) {
        std::vector<VertexSet> groups;
        for (int i = 0; i < k; ++i) groups.push_back(layers[i].pan.vertex_set());
        return Certificate::packing(pname, std::move(groups), echo);
    }

    int ell = (int)layers.size();
    VertexSet cover;  // X, in original ids
    for (int j = ell - 1; j >= 0; --j) {
        const auto& layer = layers[j];
        const auto& pan = layer.pan;
        int order = pan.order();
        if ((p == 1 && order <= 5) || (p == 2 && order < 13)) {
            cover = vset_union(cover, pan.vertex_set());
            continue;
        }
        // G_j minus the cover accumulated so far
        VertexSet base_alive = vset_minus(layer.alive, cover);
        auto sub = induced_subgraph(g, base_alive);
        std::vector<int> c_loc = map_to_local(pan.cycle, sub.to_orig);
        std::vector<int> tail_loc = map_to_local(pan.tail, sub.to_orig);
        int m = (int)c_loc.size();

        VertexSet dom_loc = p == 2 ? cycle_dominators(sub.graph, c_loc) : VertexSet{};

        // Gallai instance
        std::vector<std::pair<int, int>> cedges;
        for (int i = 0; i < m; ++i) cedges.push_back({c_loc[i], c_loc[(i + 1) % m]});
        long long target = p == 1 ? policy.apaths1(k) : policy.apaths2(k);
        GallaiResult gal;
        std::vector<int> gal_to_sub;  // gallai-graph local -> sub local
        if (p == 1) {
            Graph gg = remove_edges(sub.graph, cedges);
            gal_to_sub.resize(gg.n());
            for (int i = 0; i < gg.n(); ++i) gal_to_sub[i] = i;
            gal = gallai_apaths(gg, vset_sorted(c_loc), (int)target);
        } else {
            auto sub2 = remove_vertices(sub.graph, vset_union(dom_loc, vset_sorted(tail_loc)));
            std::vector<std::pair<int, int>> ced2;
            auto c2 = map_to_local(c_loc, sub2.to_orig);
            for (int i = 0; i < m; ++i) ced2.push_back({c2[i], c2[(i + 1) % m]});
            Graph gg = remove_edges(sub2.graph, ced2);
            gal_to_sub = sub2.to_orig;
            gal = gallai_apaths(gg, vset_sorted(c2), (int)target);
        }

        if (gal.is_packing) {
            // translate paths into the packing host: sub minus dominators
            std::vector<PanSubdivision> pans;
            if (p == 1) {
                PanSubdivision hl{tail_loc, c_loc};
                pans = pack_pan1_from_apaths(sub.graph, hl, gal.paths, k, policy);
                for (auto& pn : pans) {
                    pn.tail = map_to_orig(pn.tail, sub.to_orig);
                    pn.cycle = map_to_orig(pn.cycle, sub.to_orig);
                }
            } else {
                auto sub3 = remove_vertices(sub.graph, dom_loc);
                std::vector<std::vector<int>> paths3;
                for (auto& pth : gal.paths) {
                    std::vector<int> in_sub = map_to_orig(pth, gal_to_sub);
                    paths3.push_back(map_to_local(in_sub, sub3.to_orig));
                }
                PanSubdivision h3{map_to_local(tail_loc, sub3.to_orig),
                                  map_to_local(c_loc, sub3.to_orig)};
                pans = pack_pan2_from_apaths(sub3.graph, h3, paths3, k, policy);
                for (auto& pn : pans) {
                    pn.tail = map_to_orig(map_to_orig(pn.tail, sub3.to_orig), sub.to_orig);
                    pn.cycle = map_to_orig(map_to_orig(pn.cycle, sub3.to_orig), sub.to_orig);
                }
            }
            std::vector<VertexSet> groups;
            for (int i = 0; i < k; ++i) groups.push_back(pans[i].vertex_set());
            return Certificate::packing(pname, std::move(groups), echo);
        }

        // cover branch
        VertexSet s_sub;  // cover from gallai, in sub-local ids
        for (int v : gal.cover) s_sub.push_back(gal_to_sub[v]);
        s_sub = vset_sorted(std::move(s_sub));

        VertexSet removed = vset_union(s_sub, vset_sorted(tail_loc));
        if (p == 2) removed = vset_union(removed, dom_loc);
        auto gp = remove_vertices(sub.graph, removed);

        int win = p == 1 ? 4 : 5;
        std::vector<char> in_u(m, 0);
        std::vector<VertexSet> hits;  // original-id pan vertex sets
        for (int s0 = 0; s0 < m && (int)hits.size() < k; ++s0) {
            bool ok = true;
            for (int t = 1; t < win - 1 && ok; ++t) {
                int cpos = (s0 + t) % m;
                if (in_u[cpos]) ok = false;
                int cv = c_loc[cpos];
                if (ok && vset_contains(removed, cv)) ok = false;
            }
            if (!ok) continue;
            // window graph: everything off the cycle plus the middle vertices
            VertexSet allowed;
            VertexSet cset = vset_sorted(c_loc);
            for (int i = 0; i < gp.graph.n(); ++i)
                if (!vset_contains(cset, gp.to_orig[i])) allowed.push_back(i);
            for (int t = 1; t < win - 1; ++t) {
                int cv = c_loc[(s0 + t) % m];
                auto it = std::lower_bound(gp.to_orig.begin(), gp.to_orig.end(), cv);
                if (it != gp.to_orig.end() && *it == cv)
                    allowed.push_back((int)(it - gp.to_orig.begin()));
            }
            allowed = vset_sorted(std::move(allowed));
            auto wg = induced_subgraph(gp.graph, allowed);
            auto hit = find_min_pan(wg.graph, p);
            if (!hit) continue;
            VertexSet verts = hit->vertex_set();
            VertexSet orig_hit;
            for (int v : verts) orig_hit.push_back(sub.to_orig[gp.to_orig[wg.to_orig[v]]]);
            hits.push_back(vset_sorted(std::move(orig_hit)));
            for (int t = 0; t < win; ++t) in_u[(s0 + t) % m] = 1;
        }
        for (size_t a = 0; a < hits.size(); ++a)
            for (size_t b = a + 1; b < hits.size(); ++b)
                if (!vsets_disjoint(hits[a], hits[b]))
                    throw std::logic_error("solve_pan: window hits overlap");
        if ((int)hits.size() >= k) {
            hits.resize(k);
            return Certificate::packing(pname, std::move(hits), echo);
        }

        // the neighborhood of U on C joins the cover
        int radius = p == 1 ? 1 : 2;
        VertexSet uprime;
        for (int i = 0; i < m; ++i) {
            if (!in_u[i]) continue;
            for (int d = -radius; d <= radius; ++d)
                uprime.push_back(sub.to_orig[c_loc[((i + d) % m + m) % m]]);
        }
        uprime = vset_sorted(std::move(uprime));
        VertexSet add;
        for (int v : s_sub) add.push_back(sub.to_orig[v]);
        for (int v : tail_loc) add.push_back(sub.to_orig[v]);
        // one vertex of C: a surviving subdivision may reuse the whole cycle
        // with a fresh pendant, which no window can see
        add.push_back(sub.to_orig[c_loc[0]]);
        add = vset_union(vset_sorted(std::move(add)), uprime);
        cover = vset_union(cover, add);
    }
    return Certificate::cover_of(pname, std::move(cover), echo);
}

}  // namespace pancover
