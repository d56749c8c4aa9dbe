#include "pancover/diamond.hpp"

#include <algorithm>

#include "pancover/blocks.hpp"
#include "pancover/flow.hpp"

namespace pancover {

namespace {

std::vector<int> concat(std::vector<int> a, const std::vector<int>& b) {
    if (a.empty()) return b;
    if (b.empty()) return a;
    if (a.back() != b.front()) throw std::logic_error("concat: junction mismatch");
    a.insert(a.end(), b.begin() + 1, b.end());
    return a;
}

std::vector<int> reversed(std::vector<int> v) {
    std::reverse(v.begin(), v.end());
    return v;
}

struct QClawState {
    const Graph& g;
    std::vector<int> q;                  // induced path, spans exactly the leg ends
    int v;                               // center
    std::vector<std::vector<int>> legs;  // sorted by q-position of their last vertex

    std::vector<int> qpos;  // host vertex -> index in q (-1)

    QClawState(const Graph& g_, std::vector<int> q_, int v_, std::vector<std::vector<int>> legs_)
        : g(g_), q(std::move(q_)), v(v_), legs(std::move(legs_)) {
        normalize();
    }

    void normalize() {
        std::vector<int> pos(g.n(), -1);
        for (size_t i = 0; i < q.size(); ++i) pos[q[i]] = (int)i;
        std::stable_sort(legs.begin(), legs.end(), [&](const auto& a, const auto& b) {
            return pos[a.back()] < pos[b.back()];
        });
        int lo = pos[legs.front().back()], hi = pos[legs.back().back()];
        q = std::vector<int>(q.begin() + lo, q.begin() + hi + 1);
        qpos.assign(g.n(), -1);
        for (size_t i = 0; i < q.size(); ++i) qpos[q[i]] = (int)i;
    }

    int e(int i) const { return legs[i].back(); }
    int epos(int i) const { return qpos[e(i)]; }

    std::vector<int> q_seg(int from, int to) const {  // by position, either direction
        std::vector<int> out;
        int step = from <= to ? 1 : -1;
        for (int i = from;; i += step) {
            out.push_back(q[i]);
            if (i == to) break;
        }
        return out;
    }
};

Model qclaw_recurse(const Graph& g, std::vector<int> q, int v, std::vector<std::vector<int>> legs);

// Rebuilds the claw with one leg replaced and recurses.
Model shrink_leg(const QClawState& st, int which) {
    auto legs = st.legs;
    const auto& old_leg = legs[which];
    legs[which] = shortest_path_within(st.g, st.v, old_leg.back(), vset_sorted(old_leg));
    return qclaw_recurse(st.g, st.q, st.v, std::move(legs));
}

// z lies strictly inside `carrier` (a path); returns the two half legs
// (z -> carrier.front()) and (z -> carrier.back()).
std::pair<std::vector<int>, std::vector<int>> split_carrier(const std::vector<int>& carrier, int z) {
    auto it = std::find(carrier.begin(), carrier.end(), z);
    std::vector<int> left(carrier.begin(), it + 1);
    std::vector<int> right(it, carrier.end());
    return {reversed(std::move(left)), std::move(right)};
}

Model qclaw_recurse(const Graph& g, std::vector<int> q0, int v, std::vector<std::vector<int>> legs0) {
    QClawState st(g, std::move(q0), v, std::move(legs0));

    // 0a: legs must be induced paths
    for (int i = 0; i < 3; ++i)
        if (!is_induced_path_of(g, st.legs[i])) return shrink_leg(st, i);

    // classify the union's vertices
    std::vector<int> in_leg(g.n(), -1);  // leg interior index
    for (int i = 0; i < 3; ++i)
        for (size_t j = 1; j + 1 < st.legs[i].size(); ++j) in_leg[st.legs[i][j]] = i;
    VertexSet uni;
    for (int x : st.q) uni.push_back(x);
    uni.push_back(st.v);
    for (auto& leg : st.legs)
        for (size_t j = 1; j + 1 < leg.size(); ++j) uni.push_back(leg[j]);
    uni = vset_sorted(std::move(uni));

    auto is_theta_edge = [&](int x, int y) {
        if (st.qpos[x] >= 0 && st.qpos[y] >= 0) return std::abs(st.qpos[x] - st.qpos[y]) == 1;
        for (auto& leg : st.legs)
            for (size_t j = 0; j + 1 < leg.size(); ++j)
                if ((leg[j] == x && leg[j + 1] == y) || (leg[j] == y && leg[j + 1] == x)) return true;
        return false;
    };

    // membership helpers: int(P_i + Q_side) as seen from sorted legs
    int e1 = st.epos(0), e2 = st.epos(1), e3 = st.epos(2);
    auto in_q1_int = [&](int x) { return st.qpos[x] > e1 && st.qpos[x] < e2; };
    auto in_q2_int = [&](int x) { return st.qpos[x] > e2 && st.qpos[x] < e3; };
    auto int_p2q1 = [&](int x) { return in_leg[x] == 1 || st.qpos[x] == e2 || in_q1_int(x); };
    auto int_p1q1 = [&](int x) { return in_leg[x] == 0 || st.qpos[x] == e1 || in_q1_int(x); };
    auto int_p3q2 = [&](int x) { return in_leg[x] == 2 || st.qpos[x] == e3 || in_q2_int(x); };
    auto int_p2q2 = [&](int x) { return in_leg[x] == 1 || st.qpos[x] == e2 || in_q2_int(x); };

    // violating edges, bucketed by case priority
    std::pair<int, int> eb = {-1, -1}, eA = eb, eB = eb, eC = eb, eD = eb, eE = eb, eF = eb;
    int violating = 0;
    for (size_t ii = 0; ii < uni.size(); ++ii)
        for (size_t jj = ii + 1; jj < uni.size(); ++jj) {
            int x = uni[ii], y = uni[jj];
            if (!g.has_edge(x, y) || is_theta_edge(x, y)) continue;
            ++violating;
            auto match = [&](auto wpred, auto zpred, std::pair<int, int>& slot) {
                if (slot.first >= 0) return;
                if (wpred(x) && zpred(y))
                    slot = {x, y};
                else if (wpred(y) && zpred(x))
                    slot = {y, x};
            };
            if ((x == st.v || y == st.v)) {
                int other = x == st.v ? y : x;
                if (st.qpos[other] >= 0 && other != st.e(0) && other != st.e(1) && other != st.e(2)) {
                    if (eb.first < 0) eb = {st.v, other};
                    continue;
                }
            }
            match([&](int w) { return in_leg[w] == 0; }, int_p2q1, eA);
            match([&](int w) { return in_leg[w] == 1; }, int_p1q1, eB);
            match([&](int w) { return in_leg[w] == 1; }, int_p3q2, eC);
            match([&](int w) { return in_leg[w] == 2; }, int_p2q2, eD);
            match([&](int w) { return in_leg[w] == 0; }, int_p3q2, eE);
            match([&](int w) { return in_leg[w] == 2; }, int_p1q1, eF);
        }

    if (eb.first >= 0) {  // center adjacent to an inner q vertex
        int y = eb.second;
        std::vector<std::vector<int>> legs;
        if (st.qpos[y] < e2)
            legs = {st.legs[0], {st.v, y}, st.legs[1]};
        else
            legs = {st.legs[1], {st.v, y}, st.legs[2]};
        return qclaw_recurse(g, st.q, st.v, std::move(legs));
    }
    if (eA.first >= 0) {  // leg 1 interior vs int(P2 + Q1): new path is leg 1
        auto [w, z] = eA;
        auto carrier = concat(st.legs[1], st.q_seg(e2, e1));  // v .. e2 .. e1
        auto [to_v, to_end] = split_carrier(carrier, z);
        return qclaw_recurse(g, st.legs[0], z, {{z, w}, to_v, to_end});
    }
    if (eB.first >= 0) {  // leg 2 interior vs int(P1 + Q1): new path is leg 2
        auto [w, z] = eB;
        auto carrier = concat(st.legs[0], st.q_seg(e1, e2));  // v .. e1 .. e2
        auto [to_v, to_end] = split_carrier(carrier, z);
        return qclaw_recurse(g, st.legs[1], z, {{z, w}, to_v, to_end});
    }
    if (eC.first >= 0) {  // leg 2 interior vs int(P3 + Q2)
        auto [w, z] = eC;
        auto carrier = concat(st.legs[2], st.q_seg(e3, e2));  // v .. e3 .. e2
        auto [to_v, to_end] = split_carrier(carrier, z);
        return qclaw_recurse(g, st.legs[1], z, {{z, w}, to_v, to_end});
    }
    if (eD.first >= 0) {  // leg 3 interior vs int(P2 + Q2)
        auto [w, z] = eD;
        auto carrier = concat(st.legs[1], st.q_seg(e2, e3));  // v .. e2 .. e3
        auto [to_v, to_end] = split_carrier(carrier, z);
        return qclaw_recurse(g, st.legs[2], z, {{z, w}, to_v, to_end});
    }
    if (eE.first >= 0 || eF.first >= 0) {
        // cross case: route through the neighbor of v on leg 2
        bool mirror = eE.first < 0;
        auto [w, z] = mirror ? eF : eE;
        int r = st.legs[1][1];
        const auto& wleg = mirror ? st.legs[2] : st.legs[0];
        std::vector<int> newq = {r, st.v};
        for (size_t j = 1; j < wleg.size(); ++j) {
            newq.push_back(wleg[j]);
            if (wleg[j] == w) break;
        }
        // carrier from v to r through the far side and leg 2
        std::vector<int> far = mirror ? concat(st.legs[0], st.q_seg(e1, e2))
                                      : concat(st.legs[2], st.q_seg(e3, e2));
        std::vector<int> back = reversed(st.legs[1]);  // e2 .. v
        back.pop_back();                               // e2 .. r
        auto carrier = concat(std::move(far), std::move(back));
        auto [to_v, to_r] = split_carrier(carrier, z);
        return qclaw_recurse(g, std::move(newq), z, {{z, w}, to_v, to_r});
    }

    if (violating > 0) throw std::logic_error("diamond_from_qclaw: unclassified violating edge");

    // induced theta: assemble the diamond model
    auto pb = concat(st.legs[0], st.q_seg(e1, e2));
    auto pc = concat(st.legs[2], st.q_seg(e3, e2));
    Model m = diamond_model_from_paths(st.legs[1], pb, pc);
    auto res = verify_model(g, Pattern::diamond(), m);
    if (!res) throw std::logic_error("diamond_from_qclaw: invalid theta: " + res.reason);
    return m;
}

}  // namespace

Model diamond_from_qclaw(const Graph& g, const std::vector<int>& q, const AClaw& claw) {
    if (!is_induced_path_of(g, q)) throw PreconditionError("diamond_from_qclaw: q not induced");
    if (!verify_aclaw(g, vset_sorted(q), claw))
        throw PreconditionError("diamond_from_qclaw: not a valid Q-claw");
    return qclaw_recurse(g, q, claw.center, claw.legs);
}

std::optional<Model> detect_diamond(const Graph& g) {
    // a diamond subdivision is a theta: some block needs two independent cycles
    auto bct = blocks(g);
    bool possible = false;
    for (const auto& b : bct.blocks) {
        if (b.size() < 4) continue;
        if (induced_subgraph(g, b).graph.edge_count() >= (int)b.size() + 1) possible = true;
    }
    if (!possible) return std::nullopt;

    for (int b = 0; b < g.n(); ++b) {
        const auto& nb = g.neighbors(b);
        for (size_t ia = 0; ia < nb.size(); ++ia)
            for (size_t ic = ia + 1; ic < nb.size(); ++ic) {
                int a = nb[ia], c = nb[ic];
                if (g.has_edge(a, c)) continue;
                for (int d = 0; d < g.n(); ++d) {
                    if (d == a || d == b || d == c || g.degree(d) < 3) continue;
                    auto paths = vertex_disjoint_paths(g, d, vset_sorted({a, b, c}), 3);
                    if (paths.size() < 3) continue;
                    AClaw claw{d, std::move(paths)};
                    return diamond_from_qclaw(g, {a, b, c}, claw);
                }
            }
    }
    return std::nullopt;
}

}  // namespace pancover
