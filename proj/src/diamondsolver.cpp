#include "pancover/diamondsolver.hpp"

#include <algorithm>

#include "pancover/diamond.hpp"
#include "pancover/regular.hpp"

namespace pancover {

namespace {

Model translate_model(Model m, const std::vector<int>& to_orig) {
    for (int& v : m.branch) v = to_orig[v];
    for (auto& p : m.edge_paths)
        for (int& v : p) v = to_orig[v];
    return m;
}

int local_of(const std::vector<int>& to_orig, int orig) {
    auto it = std::lower_bound(to_orig.begin(), to_orig.end(), orig);
    if (it == to_orig.end() || *it != orig) return -1;
    return (int)(it - to_orig.begin());
}

// Positions of p's vertices; -1 for non-path vertices.
std::vector<int> position_map(int n, const std::vector<int>& p) {
    std::vector<int> pos(n, -1);
    for (size_t i = 0; i < p.size(); ++i) pos[p[i]] = (int)i;
    return pos;
}

void assert_disjoint_models(const std::vector<Model>& models, const char* where) {
    for (size_t i = 0; i < models.size(); ++i)
        for (size_t j = i + 1; j < models.size(); ++j)
            if (!vsets_disjoint(models[i].vertex_set(), models[j].vertex_set()))
                throw std::logic_error(std::string(where) + ": packed models overlap");
}

// Inside the speculative packing attempts an overlap aborts the attempt
// (PreconditionError is the fallback-to-cover signal).
void require_disjoint_models(const std::vector<Model>& models) {
    for (size_t i = 0; i < models.size(); ++i)
        for (size_t j = i + 1; j < models.size(); ++j)
            if (!vsets_disjoint(models[i].vertex_set(), models[j].vertex_set()))
                throw PreconditionError("packed models overlap");
}

// ---- stage 2/3 packing helpers --------------------------------------------

struct StagePacker {
    const Graph& g;              // current graph (original ids of the call)
    const std::vector<int>& p;   // the anchor path, original ids
    const VertexSet& removed;    // vertices already in the cover
    std::vector<int> pos;        // original id -> p position

    StagePacker(const Graph& g_, const std::vector<int>& p_, const VertexSet& removed_)
        : g(g_), p(p_), removed(removed_), pos(position_map(g_.n(), p_)) {}

    bool alive(int v) const { return !vset_contains(removed, v); }

    bool segment_alive(int lo, int hi) const {
        for (int i = lo; i <= hi; ++i)
            if (!alive(p[i])) return false;
        return true;
    }

    // Current graph with the cover removed, plus maps.
    SubgraphResult sub() const { return remove_vertices(g, removed); }
};

// The connector of a straddling 2-attachment bridge: q_b, interior..., q_a.
std::vector<int> bridge_connector(const Graph& g, const TutteBridge& b, int qa, int qb) {
    int x = -1, y = -1;
    for (int w : g.neighbors(qa))
        if (vset_contains(b.interior, w)) {
            x = w;
            break;
        }
    for (int w : g.neighbors(qb))
        if (vset_contains(b.interior, w)) {
            y = w;
            break;
        }
    if (x < 0 || y < 0) throw std::logic_error("bridge_connector: attachment without neighbor");
    auto mid = shortest_path_within(g, y, x, b.interior);
    if (mid.empty()) throw std::logic_error("bridge_connector: interior disconnected");
    std::vector<int> out = {qb};
    out.insert(out.end(), mid.begin(), mid.end());
    out.push_back(qa);
    return out;
}

}  // namespace

DiamondStageResult cover_or_pack_on_path(const Graph& g, const std::vector<int>& p, int k,
                                         const ThresholdPolicy& policy) {
    if (!is_induced_path_of(g, p)) throw PreconditionError("cover_or_pack_on_path: p not induced");
    VertexSet pset = vset_sorted(p);
    auto pos = position_map(g.n(), p);

    VertexSet cover;

    // ---- stage 1: P-claws ---------------------------------------------------
    long long claw_target = policy.ncap(3, 3 * k);
    auto ep = aclaw_ep(g, pset, (int)std::min<long long>(claw_target, 1 << 28));
    if (ep.is_packing) {
        try {
            auto models = diamonds_from_qclaws(g, p, ep.claws, k, policy);
            assert_disjoint_models(models, "cover_or_pack_on_path/stage1");
            return {true, std::move(models), {}};
        } catch (const PreconditionError&) {
            // not enough regular structure under the cap: fall back to covering
            cover = ep.terminal_s;
        }
    } else {
        cover = ep.cover;
    }

    // ---- stage 2: bridges carrying a cycle on two disjoint paths -------------
    {
        StagePacker sp(g, p, cover);
        auto cur = sp.sub();
        VertexSet pa;
        for (int v : p)
            if (sp.alive(v)) pa.push_back(local_of(cur.to_orig, v));
        pa = vset_sorted(std::move(pa));
        std::vector<TutteBridge> eligible;
        for (auto& b : tutte_bridges(cur.graph, pa)) {
            if (b.attachments.size() != 2) continue;
            TutteBridge ob;  // translate to original ids
            for (int v : b.interior) ob.interior.push_back(cur.to_orig[v]);
            for (int v : b.attachments) ob.attachments.push_back(cur.to_orig[v]);
            int p0 = pos[ob.attachments[0]], p1 = pos[ob.attachments[1]];
            if (std::abs(p0 - p1) < 2) continue;  // consecutive attachments wait for stage 4
            if (!bridge_cycle_two_paths(cur.graph, b)) continue;
            eligible.push_back(std::move(ob));
        }
        // greedy disjoint collection
        std::vector<TutteBridge> u;
        VertexSet used;
        for (auto& b : eligible) {
            auto verts = vset_union(b.interior, b.attachments);
            if (!vsets_disjoint(verts, used)) continue;
            used = vset_union(used, verts);
            u.push_back(b);
        }
        if ((long long)u.size() >= policy.ncap(2, 3 * k)) {
            try {
                std::vector<VertexSet> windows;
                for (auto& b : u)
                    windows.push_back(vset_sorted({pos[b.attachments[0]], pos[b.attachments[1]]}));
                auto rs = find_regular_subsequence(windows, 2, 3 * k, policy.ncap(2, 3 * k) + (long long)windows.size());
                if (!rs) throw PreconditionError("not enough structure");
                std::vector<Model> models;
                if (rs->partition.order() == 1) {
                    for (int i = 0; i < k; ++i) {
                        const auto& b = u[rs->indices[i]];
                        const auto& w = windows[rs->indices[i]];
                        if (!sp.segment_alive(w.front(), w.back()))
                            throw PreconditionError("window not alive");
                        std::vector<int> ql;
                        for (int t = w.front(); t <= w.back(); ++t)
                            ql.push_back(local_of(cur.to_orig, p[t]));
                        TutteBridge bl;
                        for (int v : b.interior) bl.interior.push_back(local_of(cur.to_orig, v));
                        for (int v : b.attachments) bl.attachments.push_back(local_of(cur.to_orig, v));
                        models.push_back(translate_model(
                            diamond_from_bridge_cycle(cur.graph, ql, bl), cur.to_orig));
                    }
                } else {
                    // triples: the middle bridge anchors a claw into the first part
                    int cut = rs->partition.cuts[0];
                    for (int grp = 0; grp < k; ++grp) {
                        const TutteBridge* bs[3];
                        VertexSet ws[3];
                        for (int t = 0; t < 3; ++t) {
                            bs[t] = &u[rs->indices[3 * grp + t]];
                            ws[t] = windows[rs->indices[3 * grp + t]];
                        }
                        int s_lo = (int)p.size(), s_hi = -1;
                        for (int t = 0; t < 3; ++t) {
                            s_lo = std::min(s_lo, ws[t].front());
                            s_hi = std::max(s_hi, ws[t].front());
                        }
                        int walk_lo = std::min(ws[0].back(), std::min(ws[1].back(), ws[2].back()));
                        int walk_hi = std::max(ws[0].back(), std::max(ws[1].back(), ws[2].back()));
                        if (!sp.segment_alive(s_lo, s_hi) || !sp.segment_alive(walk_lo, walk_hi))
                            throw PreconditionError("segment not alive");
                        (void)cut;
                        std::vector<int> spath;
                        for (int t = s_lo; t <= s_hi; ++t) spath.push_back(p[t]);
                        auto conn = [&](int t) {
                            return bridge_connector(g, *bs[t], p[ws[t].front()], p[ws[t].back()]);
                        };
                        auto c1 = conn(1);
                        int z = c1.front();
                        auto sidearm = [&](int t) {
                            int zp = ws[1].back(), fp = ws[t].back();
                            int dir = fp < zp ? -1 : 1;
                            std::vector<int> path = {z};
                            for (int i = zp + dir; i != fp + dir; i += dir) path.push_back(p[i]);
                            auto c = conn(t);
                            path.insert(path.end(), c.begin() + 1, c.end());
                            return path;
                        };
                        AClaw zc;
                        zc.center = z;
                        zc.legs = {c1, sidearm(0), sidearm(2)};
                        models.push_back(diamond_from_qclaw(g, spath, zc));
                    }
                }
                if ((int)models.size() >= k) {
                    models.resize(k);
                    require_disjoint_models(models);
                    return {true, std::move(models), {}};
                }
            } catch (const PreconditionError&) {
                // fall through to the attachment cover
            }
        }
        for (auto& b : u) {
            cover.push_back(b.attachments[0]);
            cover.push_back(b.attachments[1]);
        }
        cover = vset_sorted(std::move(cover));
    }

    // ---- stage 3: pairs of bridges with edge-sharing windows -----------------
    {
        StagePacker sp(g, p, cover);
        auto cur = sp.sub();
        VertexSet pa;
        for (int v : p)
            if (sp.alive(v)) pa.push_back(local_of(cur.to_orig, v));
        pa = vset_sorted(std::move(pa));
        std::vector<TutteBridge> twos;
        for (auto& b : tutte_bridges(cur.graph, pa)) {
            if (b.attachments.size() != 2) continue;
            TutteBridge ob;
            for (int v : b.interior) ob.interior.push_back(cur.to_orig[v]);
            for (int v : b.attachments) ob.attachments.push_back(cur.to_orig[v]);
            twos.push_back(std::move(ob));
        }
        auto window_of = [&](const TutteBridge& b) {
            return std::minmax(pos[b.attachments[0]], pos[b.attachments[1]]);
        };
        std::vector<std::pair<int, int>> pairs;
        for (size_t i = 0; i < twos.size(); ++i)
            for (size_t j = i + 1; j < twos.size(); ++j) {
                auto [l1, r1] = window_of(twos[i]);
                auto [l2, r2] = window_of(twos[j]);
                if (std::min(r1, r2) >= std::max(l1, l2) + 1) pairs.push_back({(int)i, (int)j});
            }
        std::vector<std::pair<int, int>> w;
        VertexSet used;
        for (auto [i, j] : pairs) {
            auto vv = vset_union(vset_union(twos[i].interior, twos[i].attachments),
                                 vset_union(twos[j].interior, twos[j].attachments));
            if (!vsets_disjoint(vv, used)) continue;
            used = vset_union(used, vv);
            w.push_back({i, j});
        }
        if ((long long)w.size() >= 4 * policy.ncap(4, 3 * k)) {
            try {
                // split by coincidence type, keep the plurality type
                auto type_of = [&](std::pair<int, int> pr) {
                    auto& bi = twos[pr.first];
                    auto& bj = twos[pr.second];
                    auto [li, ri] = window_of(bi);
                    auto [lj, rj] = window_of(bj);
                    return (li == lj ? 2 : 0) + (ri == rj ? 1 : 0);
                };
                std::vector<std::vector<std::pair<int, int>>> by_type(4);
                for (auto pr : w) by_type[type_of(pr)].push_back(pr);
                int best_type = 0;
                for (int t = 1; t < 4; ++t)
                    if (by_type[t].size() > by_type[best_type].size()) best_type = t;
                auto& family = by_type[best_type];
                std::vector<VertexSet> sets;
                for (auto pr : family) {
                    std::vector<int> s;
                    for (int b : {pr.first, pr.second})
                        for (int v : twos[b].attachments) s.push_back(pos[v]);
                    sets.push_back(vset_sorted(std::move(s)));
                }
                int n_arity = (int)sets.front().size();
                auto rs = find_regular_subsequence(sets, n_arity, 3 * k,
                                                   policy.ncap(4, 3 * k) + (long long)sets.size());
                if (!rs) throw PreconditionError("not enough structure");
                std::vector<Model> models;
                if (rs->partition.order() == 1) {
                    for (int i = 0; i < k; ++i) {
                        auto pr = family[rs->indices[i]];
                        const auto& s = sets[rs->indices[i]];
                        if (!sp.segment_alive(s.front(), s.back()))
                            throw PreconditionError("window not alive");
                        std::vector<int> ql;
                        for (int t = s.front(); t <= s.back(); ++t)
                            ql.push_back(local_of(cur.to_orig, p[t]));
                        auto to_local = [&](const TutteBridge& b) {
                            TutteBridge bl;
                            for (int v : b.interior) bl.interior.push_back(local_of(cur.to_orig, v));
                            for (int v : b.attachments)
                                bl.attachments.push_back(local_of(cur.to_orig, v));
                            return bl;
                        };
                        models.push_back(translate_model(
                            diamond_from_bridge_pair(cur.graph, ql, to_local(twos[pr.first]),
                                                     to_local(twos[pr.second])),
                            cur.to_orig));
                    }
                } else {
                    // triples through straddling bridges of each pair
                    int cut = rs->partition.cuts[0];
                    for (int grp = 0; grp < k; ++grp) {
                        const TutteBridge* straddle[3];
                        for (int t = 0; t < 3; ++t) {
                            auto pr = family[rs->indices[3 * grp + t]];
                            straddle[t] = nullptr;
                            for (int b : {pr.first, pr.second}) {
                                auto [lo, hi] = window_of(twos[b]);
                                if (lo < cut && hi >= cut) straddle[t] = &twos[b];
                            }
                            if (!straddle[t])
                                throw std::logic_error("cover_or_pack_on_path: no straddling bridge");
                        }
                        int s_lo = (int)p.size(), s_hi = -1, w_lo = (int)p.size(), w_hi = -1;
                        for (int t = 0; t < 3; ++t) {
                            auto [lo, hi] = window_of(*straddle[t]);
                            s_lo = std::min(s_lo, lo);
                            s_hi = std::max(s_hi, lo);
                            w_lo = std::min(w_lo, hi);
                            w_hi = std::max(w_hi, hi);
                        }
                        if (!sp.segment_alive(s_lo, s_hi) || !sp.segment_alive(w_lo, w_hi))
                            throw PreconditionError("segment not alive");
                        std::vector<int> spath;
                        for (int t = s_lo; t <= s_hi; ++t) spath.push_back(p[t]);
                        auto conn = [&](int t) {
                            auto [lo, hi] = window_of(*straddle[t]);
                            return bridge_connector(g, *straddle[t], p[lo], p[hi]);
                        };
                        auto c1 = conn(1);
                        int z = c1.front();
                        auto [zl, zp] = window_of(*straddle[1]);
                        (void)zl;
                        auto sidearm = [&](int t) {
                            auto [flo, fp] = window_of(*straddle[t]);
                            (void)flo;
                            int dir = fp < zp ? -1 : 1;
                            std::vector<int> path = {z};
                            for (int i = zp + dir; i != fp + dir; i += dir) path.push_back(p[i]);
                            auto c = conn(t);
                            path.insert(path.end(), c.begin() + 1, c.end());
                            return path;
                        };
                        AClaw zc;
                        zc.center = z;
                        zc.legs = {c1, sidearm(0), sidearm(2)};
                        models.push_back(diamond_from_qclaw(g, spath, zc));
                    }
                }
                if ((int)models.size() >= k) {
                    models.resize(k);
                    require_disjoint_models(models);
                    return {true, std::move(models), {}};
                }
            } catch (const PreconditionError&) {
            }
        }
        for (auto [i, j] : w)
            for (int b : {i, j})
                for (int v : twos[b].attachments) cover.push_back(v);
        cover = vset_sorted(std::move(cover));
    }

    // ---- stage 4: two-vertex window sweep with deletion greedy ----------------
    std::vector<Model> packed;
    {
        VertexSet dead = cover;  // cover plus vertices of found models
        for (size_t i = 0; i < p.size() && (int)packed.size() < k; ++i) {
            while ((int)packed.size() < k) {
                auto cur = remove_vertices(g, dead);
                VertexSet allowed;
                for (int v = 0; v < cur.graph.n(); ++v)
                    if (pos[cur.to_orig[v]] < 0) allowed.push_back(v);
                bool any_window = false;
                std::vector<int> wverts = {p[i]};
                if (i + 1 < p.size()) wverts.push_back(p[i + 1]);
                for (int v : wverts) {
                    int l = local_of(cur.to_orig, v);
                    if (l >= 0) {
                        allowed.push_back(l);
                        any_window = true;
                    }
                }
                if (!any_window) break;
                allowed = vset_sorted(std::move(allowed));
                auto wg = induced_subgraph(cur.graph, allowed);
                auto found = detect_diamond(wg.graph);
                if (!found) break;
                Model m = translate_model(translate_model(*found, wg.to_orig), cur.to_orig);
                packed.push_back(m);
                dead = vset_union(dead, m.vertex_set());
            }
        }
        if ((int)packed.size() >= k) {
            packed.resize(k);
            assert_disjoint_models(packed, "cover_or_pack_on_path/stage4");
            return {true, std::move(packed), {}};
        }
        // cover takes the hit windows (the path part of every packed model)
        for (const auto& m : packed)
            for (int v : m.vertex_set())
                if (pos[v] >= 0) cover.push_back(v);
        cover = vset_sorted(std::move(cover));
    }

    // completeness re-scan: extend the cover until every window is clean
    for (bool dirty = true; dirty;) {
        dirty = false;
        auto cur = remove_vertices(g, cover);
        for (size_t i = 0; i < p.size(); ++i) {
            VertexSet allowed;
            for (int v = 0; v < cur.graph.n(); ++v)
                if (pos[cur.to_orig[v]] < 0) allowed.push_back(v);
            std::vector<int> win;
            std::vector<int> wverts = {p[i]};
            if (i + 1 < p.size()) wverts.push_back(p[i + 1]);
            for (int v : wverts) {
                int l = local_of(cur.to_orig, v);
                if (l >= 0) {
                    allowed.push_back(l);
                    win.push_back(v);
                }
            }
            if (win.empty()) continue;
            allowed = vset_sorted(std::move(allowed));
            auto wg = induced_subgraph(cur.graph, allowed);
            auto found = detect_diamond(wg.graph);
            if (!found) continue;
            // the surviving subdivision meets p inside this window only
            Model m = translate_model(translate_model(*found, wg.to_orig), cur.to_orig);
            int on_path = 0;
            for (int v : m.vertex_set())
                if (pos[v] >= 0) ++on_path;
            if (on_path > 2)
                throw std::logic_error("cover_or_pack_on_path: survivor meets p in 3+ vertices");
            for (int v : win) cover.push_back(v);
            cover = vset_sorted(std::move(cover));
            dirty = true;
            break;
        }
    }
    return {false, {}, std::move(cover)};
}

DiamondStageResult cover_or_pack_given_model(const Graph& g, const Model& h, int k,
                                             const ThresholdPolicy& policy) {
    {
        auto res = verify_model(g, Pattern::diamond(), h);
        if (!res) throw PreconditionError("cover_or_pack_given_model: invalid model");
        auto sub = remove_vertices(g, h.vertex_set());
        if (detect_diamond(sub.graph))
            throw PreconditionError("cover_or_pack_given_model: residual not diamond-free");
    }
    // the three branch-to-branch paths of the model; when the direct branch
    // edge is a single host edge, the long paths drop their far endpoint so
    // they stay induced (it is still covered by the first path)
    bool direct_edge = h.edge_paths[0].size() == 2;
    auto join = [&](const std::vector<int>& a, const std::vector<int>& b) {
        std::vector<int> out = a;  // phi0 .. mid
        out.insert(out.end(), b.rbegin() + 1, b.rend());  // .. phi1
        if (direct_edge) out.pop_back();
        return out;
    };
    std::vector<std::vector<int>> paths = {
        h.edge_paths[0],
        join(h.edge_paths[1], h.edge_paths[3]),
        join(h.edge_paths[2], h.edge_paths[4]),
    };
    VertexSet cover;
    for (auto& path : paths) {
        auto res = cover_or_pack_on_path(g, path, k, policy);
        if (res.is_packing) return res;
        cover = vset_union(cover, res.cover);
    }
    return {false, {}, std::move(cover)};
}

Certificate solve_diamond(const Graph& g, int k, const ThresholdPolicy& policy) {
    if (k < 1) throw std::invalid_argument("solve_diamond: k must be positive");
    std::string echo = policy.echo(k);

    struct Layer {
        VertexSet alive;
        Model model;  // original ids
    };
    std::vector<Layer> layers;
    VertexSet alive(g.n());
    for (int i = 0; i < g.n(); ++i) alive[i] = i;
    while ((int)layers.size() < k) {
        auto sub = induced_subgraph(g, alive);
        auto m = detect_diamond(sub.graph);
        if (!m) break;
        Model om = translate_model(*m, sub.to_orig);
        layers.push_back({alive, om});
        alive = vset_minus(alive, om.vertex_set());
    }
    if ((int)layers.size() >= k) {
        std::vector<VertexSet> groups;
        for (int i = 0; i < k; ++i) groups.push_back(layers[i].model.vertex_set());
        return Certificate::packing("diamond", std::move(groups), echo);
    }

    VertexSet cover;
    for (int j = (int)layers.size() - 1; j >= 0; --j) {
        VertexSet base = vset_minus(layers[j].alive, cover);
        auto sub = induced_subgraph(g, base);
        Model ml = layers[j].model;
        for (int& v : ml.branch) v = local_of(sub.to_orig, v);
        for (auto& pth : ml.edge_paths)
            for (int& v : pth) v = local_of(sub.to_orig, v);
        auto res = cover_or_pack_given_model(sub.graph, ml, k, policy);
        if (res.is_packing) {
            std::vector<VertexSet> groups;
            for (int i = 0; i < k; ++i) {
                VertexSet vs = res.models[i].vertex_set();
                for (int& v : vs) v = sub.to_orig[v];
                groups.push_back(vset_sorted(std::move(vs)));
            }
            return Certificate::packing("diamond", std::move(groups), echo);
        }
        VertexSet add;
        for (int v : res.cover) add.push_back(sub.to_orig[v]);
        cover = vset_union(cover, vset_sorted(std::move(add)));
    }
    return Certificate::cover_of("diamond", std::move(cover), echo);
}

}  // namespace pancover
