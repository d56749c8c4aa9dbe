#include "pancover/tutte.hpp"

#include <algorithm>
#include <queue>

#include "pancover/blocks.hpp"
#include "pancover/diamond.hpp"
#include "pancover/regular.hpp"

namespace pancover {

std::vector<TutteBridge> tutte_bridges(const Graph& g, const VertexSet& a) {
    auto sub = remove_vertices(g, a);
    std::vector<TutteBridge> out;
    for (const auto& comp : components(sub.graph)) {
        TutteBridge b;
        for (int v : comp) b.interior.push_back(sub.to_orig[v]);
        std::sort(b.interior.begin(), b.interior.end());
        std::vector<int> att;
        for (int v : b.interior)
            for (int w : g.neighbors(v))
                if (vset_contains(a, w)) att.push_back(w);
        b.attachments = vset_sorted(std::move(att));
        out.push_back(std::move(b));
    }
    return out;
}

bool bridge_cycle_two_paths(const Graph& g, const TutteBridge& b) {
    if (b.attachments.size() != 2)
        throw PreconditionError("bridge_cycle_two_paths: need 2 attachments");
    int v = b.attachments[0], w = b.attachments[1];
    if (g.has_edge(v, w)) throw PreconditionError("bridge_cycle_two_paths: attachments adjacent");
    auto sub = induced_subgraph(g, vset_union(b.interior, b.attachments));
    auto loc = [&](int x) {
        return (int)(std::lower_bound(sub.to_orig.begin(), sub.to_orig.end(), x) - sub.to_orig.begin());
    };
    auto bct = blocks(sub.graph);
    for (int blk : bct.block_path(loc(v), loc(w)))
        if (bct.blocks[blk].size() >= 3) return true;
    return false;
}

AClaw qclaw_from_bridge(const Graph& g, const std::vector<int>& q, const TutteBridge& b) {
    if (b.attachments.size() < 3) throw PreconditionError("qclaw_from_bridge: need 3 attachments");
    int a0 = b.attachments[0], a1 = b.attachments[1], a2 = b.attachments[2];
    auto nb_in_interior = [&](int av) {
        for (int w : g.neighbors(av))
            if (vset_contains(b.interior, w)) return w;
        throw std::logic_error("qclaw_from_bridge: attachment without interior neighbor");
    };
    int r0 = nb_in_interior(a0), r1 = nb_in_interior(a1), r2 = nb_in_interior(a2);

    auto sub = induced_subgraph(g, b.interior);
    auto loc = [&](int v) {
        return (int)(std::lower_bound(sub.to_orig.begin(), sub.to_orig.end(), v) - sub.to_orig.begin());
    };
    std::vector<int> par(sub.graph.n(), -2);
    std::queue<int> bfq;
    par[loc(r0)] = -1;
    bfq.push(loc(r0));
    while (!bfq.empty()) {
        int x = bfq.front();
        bfq.pop();
        for (int y : sub.graph.neighbors(x))
            if (par[y] == -2) {
                par[y] = x;
                bfq.push(y);
            }
    }
    auto tree_path = [&](int target) {  // r0 .. target in original ids
        std::vector<int> path;
        for (int x = loc(target); x != -1; x = par[x]) path.push_back(sub.to_orig[x]);
        std::reverse(path.begin(), path.end());
        return path;
    };
    auto p1 = tree_path(r1), p2 = tree_path(r2);
    size_t common = 0;
    while (common < p1.size() && common < p2.size() && p1[common] == p2[common]) ++common;
    // legs of the claw meet at the median of the spanning subtree
    AClaw claw;
    claw.center = p1[common - 1];
    std::vector<int> la(p1.begin(), p1.begin() + common);  // r0 .. mid
    std::reverse(la.begin(), la.end());
    la.push_back(a0);
    std::vector<int> lb(p1.begin() + common - 1, p1.end());
    lb.push_back(a1);
    std::vector<int> lc(p2.begin() + common - 1, p2.end());
    lc.push_back(a2);
    claw.legs = {std::move(la), std::move(lb), std::move(lc)};
    if (!verify_aclaw(g, vset_sorted(q), claw))
        throw std::logic_error("qclaw_from_bridge: produced an invalid claw");
    return claw;
}

namespace {

Model check_model(const Graph& g, Model m, const char* where) {
    auto res = verify_model(g, Pattern::diamond(), m);
    if (!res) throw std::logic_error(std::string(where) + ": " + res.reason);
    return m;
}

}  // namespace

Model diamond_from_bridge_cycle(const Graph& g, const std::vector<int>& q, const TutteBridge& b) {
    if (!bridge_cycle_two_paths(g, b))
        throw PreconditionError("diamond_from_bridge_cycle: no cycle with two disjoint paths");
    int lo = -1, hi = -1;
    for (size_t i = 0; i < q.size(); ++i)
        if (vset_contains(b.attachments, q[i])) {
            if (lo < 0) lo = (int)i;
            hi = (int)i;
        }
    if (lo < 0 || lo == hi) throw PreconditionError("diamond_from_bridge_cycle: attachments off the path");
    VertexSet area = b.interior;
    for (int i = lo; i <= hi; ++i) area.push_back(q[i]);
    area = vset_sorted(std::move(area));
    auto sub = induced_subgraph(g, area);
    auto found = detect_diamond(sub.graph);
    if (!found) throw std::logic_error("diamond_from_bridge_cycle: detector found nothing");
    Model m = *found;
    for (int& v : m.branch) v = sub.to_orig[v];
    for (auto& p : m.edge_paths)
        for (int& v : p) v = sub.to_orig[v];
    return check_model(g, std::move(m), "diamond_from_bridge_cycle");
}

Model diamond_from_bridge_pair(const Graph& g, const std::vector<int>& q, const TutteBridge& b1,
                               const TutteBridge& b2) {
    if (b1.attachments.size() != 2 || b2.attachments.size() != 2)
        throw PreconditionError("diamond_from_bridge_pair: bridges need 2 attachments");
    std::vector<int> qpos(g.n(), -1);
    for (size_t i = 0; i < q.size(); ++i) qpos[q[i]] = (int)i;
    const TutteBridge* h1 = &b1;
    const TutteBridge* h2 = &b2;
    auto span = [&](const TutteBridge* h) -> std::pair<int, int> {
        int p0 = qpos[h->attachments[0]], p1 = qpos[h->attachments[1]];
        if (p0 < 0 || p1 < 0) throw PreconditionError("diamond_from_bridge_pair: attachment off path");
        return {std::min(p0, p1), std::max(p0, p1)};
    };
    auto [a1, e1] = span(h1);
    auto [a2, e2] = span(h2);
    if (a1 > a2) {
        std::swap(h1, h2);
        std::swap(a1, a2);
        std::swap(e1, e2);
    }
    if (e1 < a2 + 1) throw PreconditionError("diamond_from_bridge_pair: windows share no edge");

    auto nb_in = [&](int qv, const TutteBridge* h) {
        for (int w : g.neighbors(qv))
            if (vset_contains(h->interior, w)) return w;
        throw std::logic_error("diamond_from_bridge_pair: attachment without interior neighbor");
    };
    int x1 = nb_in(q[a1], h1), y1 = nb_in(q[e1], h1);
    int x2 = nb_in(q[a2], h2), y2 = nb_in(q[e2], h2);
    auto r1 = shortest_path_within(g, x1, y1, h1->interior);
    auto r2 = shortest_path_within(g, x2, y2, h2->interior);
    if (r1.empty() || r2.empty())
        throw std::logic_error("diamond_from_bridge_pair: interior disconnected");

    std::vector<int> newq = {x1};
    for (int i = a1; i <= a2; ++i) newq.push_back(q[i]);
    newq.push_back(x2);

    int j = std::min(e1, e2);
    bool first_closer = e1 <= e2;
    const auto& rj = first_closer ? r1 : r2;
    const auto& ro = first_closer ? r2 : r1;
    int far_end = std::max(e1, e2);

    AClaw claw;
    claw.center = q[j];
    std::vector<int> l1;
    for (int i = j; i >= a2; --i) l1.push_back(q[i]);
    std::vector<int> l2 = {q[j]};
    l2.insert(l2.end(), rj.rbegin(), rj.rend());  // y .. x of the nearer bridge
    std::vector<int> l3;
    for (int i = j; i <= far_end; ++i) l3.push_back(q[i]);
    l3.insert(l3.end(), ro.rbegin(), ro.rend());
    claw.legs = {std::move(l1), std::move(l2), std::move(l3)};
    return diamond_from_qclaw(g, newq, claw);
}

namespace {

int part_index(const RegularPartition& part, int pos) {
    int idx = 0;
    for (int cut : part.cuts) {
        if (pos < cut) break;
        ++idx;
    }
    return idx;
}

}  // namespace

std::vector<Model> diamonds_from_qclaws(const Graph& g, const std::vector<int>& q,
                                        const std::vector<AClaw>& claws, int k,
                                        const ThresholdPolicy& policy) {
    std::vector<int> qpos(g.n(), -1);
    for (size_t i = 0; i < q.size(); ++i) qpos[q[i]] = (int)i;
    std::vector<VertexSet> leafpos;
    for (const auto& c : claws) {
        std::vector<int> ps;
        for (int lf : c.leaves()) {
            if (qpos[lf] < 0) throw PreconditionError("diamonds_from_qclaws: leaf off the path");
            ps.push_back(qpos[lf]);
        }
        leafpos.push_back(vset_sorted(std::move(ps)));
    }
    auto rs = find_regular_subsequence(leafpos, 3, 3 * k, policy.ncap(3, 3 * k));
    if (!rs) throw PreconditionError("not enough structure");
    const auto& part = rs->partition;
    for (size_t t = 0; t < part.tags.size(); ++t)
        if (part.tags[t] == RpTag::RP1)
            throw std::logic_error("diamonds_from_qclaws: RP1 part on disjoint claws");

    std::vector<Model> out;
    if (part.order() == 1) {
        for (int i = 0; i < k; ++i) {
            const AClaw& cl = claws[rs->indices[i]];
            const auto& ps = leafpos[rs->indices[i]];
            std::vector<int> window(q.begin() + ps.front(), q.begin() + ps.back() + 1);
            out.push_back(diamond_from_qclaw(g, window, cl));
        }
    } else {
        for (int grp = 0; grp < k; ++grp) {
            int base = 3 * grp;
            const AClaw* cls[3];
            const VertexSet* lps[3];
            for (int t = 0; t < 3; ++t) {
                cls[t] = &claws[rs->indices[base + t]];
                lps[t] = &leafpos[rs->indices[base + t]];
            }
            auto positions_in = [&](int t, int pidx) {
                VertexSet v;
                for (int pos : *lps[t])
                    if (part_index(part, pos) == pidx) v.push_back(pos);
                return v;
            };
            // S spans the three first-part traces
            int s_lo = (int)q.size(), s_hi = -1;
            for (int t = 0; t < 3; ++t)
                for (int pos : positions_in(t, 0)) {
                    s_lo = std::min(s_lo, pos);
                    s_hi = std::max(s_hi, pos);
                }
            std::vector<int> spath(q.begin() + s_lo, q.begin() + s_hi + 1);

            VertexSet mid2 = positions_in(1, 1);
            if (mid2.empty()) throw std::logic_error("diamonds_from_qclaws: empty middle trace");
            int z_pos = mid2.front();
            int z = q[z_pos];

            auto leg_ending_at = [&](const AClaw* cl, int leaf) -> const std::vector<int>& {
                for (const auto& leg : cl->legs)
                    if (leg.back() == leaf) return leg;
                throw std::logic_error("diamonds_from_qclaws: missing leg");
            };
            auto i1_leaf_of = [&](int t) {
                auto v = positions_in(t, 0);
                if (v.empty()) throw std::logic_error("diamonds_from_qclaws: empty first trace");
                return q[v.front()];
            };

            // through the middle claw down to its first-part leaf
            const auto& zleg = leg_ending_at(cls[1], z);
            std::vector<int> p1(zleg.rbegin(), zleg.rend());
            const auto& down1 = leg_ending_at(cls[1], i1_leaf_of(1));
            p1.insert(p1.end(), down1.begin() + 1, down1.end());

            auto side = [&](int t) {
                VertexSet i2s = positions_in(t, 1);
                if (i2s.empty()) throw std::logic_error("diamonds_from_qclaws: empty side trace");
                int dir = i2s.back() < z_pos ? -1 : 1;
                std::vector<int> path = {z};
                int pos = z_pos;
                while (!vset_contains(i2s, pos)) {
                    pos += dir;
                    if (pos < 0 || pos >= (int)q.size())
                        throw std::logic_error("diamonds_from_qclaws: walked off the path");
                    path.push_back(q[pos]);
                }
                const auto& up = leg_ending_at(cls[t], q[pos]);
                path.insert(path.end(), up.rbegin() + 1, up.rend());  // climb to the center
                const auto& down = leg_ending_at(cls[t], i1_leaf_of(t));
                path.insert(path.end(), down.begin() + 1, down.end());
                return path;
            };
            AClaw zc;
            zc.center = z;
            zc.legs = {std::move(p1), side(0), side(2)};
            out.push_back(diamond_from_qclaw(g, spath, zc));
        }
    }
    for (size_t i = 0; i < out.size(); ++i)
        for (size_t j = i + 1; j < out.size(); ++j)
            if (!vsets_disjoint(out[i].vertex_set(), out[j].vertex_set()))
                throw std::logic_error("diamonds_from_qclaws: models overlap");
    return out;
}

}  // namespace pancover
