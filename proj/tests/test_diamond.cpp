#include <doctest.h>

#include "pancover/diamond.hpp"
#include "pancover/diamondsolver.hpp"
#include "pancover/findmodel.hpp"
#include "pancover/flow.hpp"
#include "pancover/forge.hpp"
#include "pancover/oracle.hpp"
#include "pancover/tutte.hpp"
#include "testutil.hpp"

using namespace pancover;
namespace tu = pancover::testutil;

namespace {

Graph diamond_graph() {
    return tu::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}});
}

Graph theta(int l1, int l2, int l3) {
    // three internally disjoint paths between two poles
    int n = 2 + (l1 - 1) + (l2 - 1) + (l3 - 1);
    Graph g(n);
    int next = 2;
    for (int len : {l1, l2, l3}) {
        int prev = 0;
        for (int i = 1; i < len; ++i) {
            g.add_edge(prev, next);
            prev = next++;
        }
        g.add_edge(prev, 1);
    }
    return g;
}

}  // namespace

TEST_CASE("detect_diamond base cases") {
    auto m = detect_diamond(diamond_graph());
    REQUIRE(m.has_value());
    CHECK(m->vertex_set().size() == 4);

    CHECK_FALSE(detect_diamond(complete_graph(4)).has_value());
    CHECK_FALSE(detect_diamond(complete_graph(6)).has_value());
    CHECK_FALSE(detect_diamond(cycle_graph(8)).has_value());

    // K_{2,3} is a subdivided diamond
    Graph k23 = theta(2, 2, 2);
    CHECK(detect_diamond(k23).has_value());
}

TEST_CASE("detect_diamond agrees with find_model on small connected graphs") {
    Pattern d = Pattern::diamond();
    for (int n = 4; n <= 7; ++n) {
        for (const Graph& g : tu::all_connected_graphs(n)) {
            bool generic = find_model(g, d).has_value();
            auto fast = detect_diamond(g);
            CHECK(fast.has_value() == generic);
            if (fast) CHECK(verify_model(g, d, *fast).ok);
        }
    }
}

TEST_CASE("diamond_from_qclaw base case and chorded recursions") {
    // v adjacent to exactly a, b, c on the path abc
    Graph g = tu::from_edges(4, {{0, 1}, {1, 2}, {3, 0}, {3, 1}, {3, 2}});
    AClaw claw{3, {{3, 0}, {3, 1}, {3, 2}}};
    auto m = diamond_from_qclaw(g, {0, 1, 2}, claw);
    CHECK(m.vertex_set() == VertexSet{0, 1, 2, 3});

    // randomized claws on random hosts
    std::mt19937 rng(83);
    int built = 0;
    for (int t = 0; t < 600 && built < 150; ++t) {
        std::uniform_int_distribution<int> nd(7, 13);
        std::uniform_real_distribution<double> dd(0.15, 0.4);
        Graph h = tu::random_graph(nd(rng), dd(rng), rng);
        // find some induced path of length 2 and a flow claw onto it
        std::optional<Model> got;
        for (int b = 0; b < h.n() && !got; ++b)
            for (int a = 0; a < h.n() && !got; ++a)
                for (int c = a + 1; c < h.n() && !got; ++c) {
                    if (a == b || c == b) continue;
                    if (!h.has_edge(a, b) || !h.has_edge(b, c) || h.has_edge(a, c)) continue;
                    for (int d = 0; d < h.n() && !got; ++d) {
                        if (d == a || d == b || d == c || h.degree(d) < 3) continue;
                        auto paths = vertex_disjoint_paths(h, d, vset_sorted({a, b, c}), 3);
                        if (paths.size() < 3) continue;
                        AClaw cl{d, paths};
                        auto model = diamond_from_qclaw(h, {a, b, c}, cl);
                        VertexSet uni = cl.vertex_set();
                        for (int q : {a, b, c}) uni.push_back(q);
                        uni = vset_sorted(std::move(uni));
                        CHECK(vset_minus(model.vertex_set(), uni).empty());
                        got = model;
                        ++built;
                    }
                }
    }
    CHECK(built >= 40);
}

TEST_CASE("tutte_bridges") {
    Graph c6 = cycle_graph(6);
    auto bs = tutte_bridges(c6, {0, 3});
    REQUIRE(bs.size() == 2);
    CHECK(bs[0].attachments == VertexSet{0, 3});
    CHECK(bs[1].attachments == VertexSet{0, 3});

    Graph star = tu::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
    CHECK(tutte_bridges(star, {0}).size() == 4);

    std::mt19937 rng(89);
    for (int t = 0; t < 100; ++t) {
        Graph g = tu::random_graph(10, 0.3, rng);
        VertexSet a = {0, 1, 2};
        auto bridges = tutte_bridges(g, a);
        VertexSet all_int;
        for (const auto& b : bridges) {
            for (int v : b.interior) all_int.push_back(v);
            // recomputed attachments match
            VertexSet att;
            for (int v : b.interior)
                for (int w : g.neighbors(v))
                    if (vset_contains(a, w)) att.push_back(w);
            CHECK(vset_sorted(std::move(att)) == b.attachments);
        }
        all_int = vset_sorted(std::move(all_int));
        VertexSet rest;
        for (int v = 3; v < 10; ++v) rest.push_back(v);
        CHECK(all_int == rest);
    }
}

TEST_CASE("bridge_cycle_two_paths via the block-cut tree") {
    // theta bridge between two path vertices: true
    Graph g1(8);
    // path 0-1-2; bridge interior: 3,4,5,6 forming a cycle, legs to 0 and 2
    g1.add_edge(0, 1);
    g1.add_edge(1, 2);
    g1.add_edge(0, 3);
    g1.add_edge(3, 4);
    g1.add_edge(4, 5);
    g1.add_edge(5, 6);
    g1.add_edge(6, 3);
    g1.add_edge(5, 7);
    g1.add_edge(7, 2);
    auto bs = tutte_bridges(g1, {0, 1, 2});
    REQUIRE(bs.size() == 1);
    CHECK(bridge_cycle_two_paths(g1, bs[0]));

    // bare path bridge: false
    Graph g2 = cycle_graph(6);
    auto bs2 = tutte_bridges(g2, {0, 3});
    CHECK_FALSE(bridge_cycle_two_paths(g2, bs2[0]));

    // cycle hanging off the v-w path by a cut vertex: false
    Graph g3(7);
    g3.add_edge(0, 2);
    g3.add_edge(2, 3);
    g3.add_edge(3, 1);
    g3.add_edge(2, 4);  // pendant triangle at 2
    g3.add_edge(4, 5);
    g3.add_edge(5, 6);
    g3.add_edge(6, 4);
    auto bs3 = tutte_bridges(g3, {0, 1});
    REQUIRE(bs3.size() == 1);
    CHECK_FALSE(bridge_cycle_two_paths(g3, bs3[0]));
}

TEST_CASE("qclaw_from_bridge") {
    // single interior vertex adjacent to three path vertices
    Graph g(5);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(4, 0);
    g.add_edge(4, 2);
    g.add_edge(4, 3);
    auto bs = tutte_bridges(g, {0, 1, 2, 3});
    REQUIRE(bs.size() == 1);
    auto claw = qclaw_from_bridge(g, {0, 1, 2, 3}, bs[0]);
    CHECK(claw.center == 4);

    // interior path with ends and midpoint attached
    Graph g2(7);
    g2.add_edge(0, 1);
    g2.add_edge(1, 2);
    g2.add_edge(2, 3);
    g2.add_edge(4, 5);
    g2.add_edge(5, 6);
    g2.add_edge(4, 0);
    g2.add_edge(5, 2);
    g2.add_edge(6, 3);
    auto bs2 = tutte_bridges(g2, {0, 1, 2, 3});
    REQUIRE(bs2.size() == 1);
    auto claw2 = qclaw_from_bridge(g2, {0, 1, 2, 3}, bs2[0]);
    CHECK(claw2.legs.size() == 3);
}

TEST_CASE("diamond_from_bridge_cycle and pair") {
    // clean theta hung on two far path vertices
    Graph g1(9);
    for (int i = 0; i < 5; ++i)
        if (i + 1 < 5) g1.add_edge(i, i + 1);
    g1.add_edge(0, 5);
    g1.add_edge(5, 6);
    g1.add_edge(6, 7);
    g1.add_edge(7, 8);
    g1.add_edge(8, 5);
    g1.add_edge(7, 4);  // second leg from the cycle to the path
    auto bs = tutte_bridges(g1, {0, 1, 2, 3, 4});
    REQUIRE(bs.size() == 1);
    auto m = diamond_from_bridge_cycle(g1, {0, 1, 2, 3, 4}, bs[0]);
    CHECK(verify_model(g1, Pattern::diamond(), m).ok);

    // two interior paths over overlapping windows
    Graph g2(9);
    for (int i = 0; i < 5; ++i)
        if (i + 1 < 5) g2.add_edge(i, i + 1);
    g2.add_edge(0, 5);
    g2.add_edge(5, 6);
    g2.add_edge(6, 3);
    g2.add_edge(1, 7);
    g2.add_edge(7, 8);
    g2.add_edge(8, 4);
    auto bs2 = tutte_bridges(g2, {0, 1, 2, 3, 4});
    REQUIRE(bs2.size() == 2);
    auto m2 = diamond_from_bridge_pair(g2, {0, 1, 2, 3, 4}, bs2[0], bs2[1]);
    CHECK(verify_model(g2, Pattern::diamond(), m2).ok);
}

TEST_CASE("diamonds_from_qclaws, separated and nested") {
    ThresholdPolicy pol;
    pol.set("ncap3", 3);
    // three claws with strictly separated leaf triples on one long path
    int m = 12;
    Graph g(m + 3);
    for (int i = 0; i + 1 < m; ++i) g.add_edge(i, i + 1);
    std::vector<int> q(m);
    for (int i = 0; i < m; ++i) q[i] = i;
    std::vector<AClaw> claws;
    for (int t = 0; t < 3; ++t) {
        int c = m + t;
        g.add_edge(c, 4 * t);
        g.add_edge(c, 4 * t + 1);
        g.add_edge(c, 4 * t + 2);
        claws.push_back(AClaw{c, {{c, 4 * t}, {c, 4 * t + 1}, {c, 4 * t + 2}}});
    }
    auto models = diamonds_from_qclaws(g, q, claws, 1, pol);
    REQUIRE(models.size() == 1);
    CHECK(verify_model(g, Pattern::diamond(), models[0]).ok);

    // nested claws trigger the triple construction
    Graph g2(12 + 3);
    for (int i = 0; i + 1 < 12; ++i) g2.add_edge(i, i + 1);
    std::vector<int> q2(12);
    for (int i = 0; i < 12; ++i) q2[i] = i;
    std::vector<AClaw> nested;
    // leaves: claw t gets {t, 5 - ... } nested around the middle
    int lpos[3][3] = {{0, 1, 9}, {2, 3, 10}, {4, 5, 11}};
    for (int t = 0; t < 3; ++t) {
        int c = 12 + t;
        for (int j = 0; j < 3; ++j) g2.add_edge(c, lpos[t][j]);
        nested.push_back(
            AClaw{c, {{c, lpos[t][0]}, {c, lpos[t][1]}, {c, lpos[t][2]}}});
    }
    auto models2 = diamonds_from_qclaws(g2, q2, nested, 1, pol);
    REQUIRE(models2.size() == 1);
    CHECK(verify_model(g2, Pattern::diamond(), models2[0]).ok);
}

TEST_CASE("cover_or_pack_on_path trivial and planted cases") {
    ThresholdPolicy pol;
    // bare path: empty cover
    Graph p = path_graph(6);
    std::vector<int> pv = {0, 1, 2, 3, 4, 5};
    auto r = cover_or_pack_on_path(p, pv, 2, pol);
    CHECK_FALSE(r.is_packing);
    CHECK(r.cover.empty());

    // two disjoint thetas on far windows, tiny caps force the packing branch
    Graph g(12 + 8);
    for (int i = 0; i + 1 < 12; ++i) g.add_edge(i, i + 1);
    std::vector<int> q(12);
    for (int i = 0; i < 12; ++i) q[i] = i;
    for (int t = 0; t < 2; ++t) {
        int base = 12 + 4 * t;
        int a = 7 * t, b = 7 * t + 3;
        g.add_edge(a, base);
        g.add_edge(base, base + 1);
        g.add_edge(base + 1, base + 2);
        g.add_edge(base + 2, base + 3);
        g.add_edge(base + 3, base);
        g.add_edge(base + 2, b);
    }
    auto r2 = cover_or_pack_on_path(g, q, 2, pol);
    if (!r2.is_packing) {
        // with the default policy the cover route is fine too; it must be complete
        auto sub = remove_vertices(g, r2.cover);
        CHECK_FALSE(detect_diamond(sub.graph).has_value());
    }

    // single theta and k = 2: must be a complete cover
    Graph g3(12 + 4);
    for (int i = 0; i + 1 < 12; ++i) g3.add_edge(i, i + 1);
    int base = 12;
    g3.add_edge(2, base);
    g3.add_edge(base, base + 1);
    g3.add_edge(base + 1, base + 2);
    g3.add_edge(base + 2, base + 3);
    g3.add_edge(base + 3, base);
    g3.add_edge(base + 2, 8);
    auto r3 = cover_or_pack_on_path(g3, q, 2, pol);
    REQUIRE_FALSE(r3.is_packing);
    auto sub3 = remove_vertices(g3, r3.cover);
    CHECK_FALSE(detect_diamond(sub3.graph).has_value());
}

TEST_CASE("cover_or_pack_given_model") {
    ThresholdPolicy pol;
    Graph d = diamond_graph();
    Model id;
    id.branch = {0, 1, 2, 3};
    id.edge_paths = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}};
    auto r = cover_or_pack_given_model(d, id, 1, pol);
    if (r.is_packing) {
        REQUIRE(r.models.size() == 1);
        CHECK(verify_model(d, Pattern::diamond(), r.models[0]).ok);
    } else {
        CHECK((long long)r.cover.size() <= pol.g1(1));
        auto sub = remove_vertices(d, r.cover);
        CHECK_FALSE(detect_diamond(sub.graph).has_value());
    }

    // violated hypothesis: a second diamond off the model
    Graph two(8);
    for (auto [u, v] : diamond_graph().edges()) two.add_edge(u, v);
    for (auto [u, v] : diamond_graph().edges()) two.add_edge(u + 4, v + 4);
    CHECK_THROWS_AS(cover_or_pack_given_model(two, id, 1, pol), PreconditionError);
}

TEST_CASE("solve_diamond on the triangle wall") {
    // the wall holds long theta subdivisions through its cross edges, but no
    // two disjoint ones at order 2; the cover must be verified complete
    auto wall = triangle_wall(2);
    REQUIRE(detect_diamond(wall.graph).has_value());
    auto cert = solve_diamond(wall.graph, 2);
    CHECK(cert.kind == Certificate::Kind::Cover);
    CHECK(verify_certificate(wall.graph, Pattern::diamond(), cert).ok);
}

TEST_CASE("solve_diamond on packings, cliques, and random graphs") {
    ThresholdPolicy pol;
    // k disjoint diamonds
    Graph two(8);
    for (auto [u, v] : diamond_graph().edges()) {
        two.add_edge(u, v);
        two.add_edge(u + 4, v + 4);
    }
    auto cert = solve_diamond(two, 2, pol);
    CHECK(cert.kind == Certificate::Kind::Packing);
    CHECK(verify_certificate(two, Pattern::diamond(), cert).ok);

    // trees and cliques: empty cover
    auto c1 = solve_diamond(path_graph(8), 3, pol);
    CHECK(c1.cover.empty());
    auto c2 = solve_diamond(complete_graph(6), 2, pol);
    CHECK(c2.cover.empty());

    std::mt19937 rng(97);
    for (int t = 0; t < 60; ++t) {
        std::uniform_int_distribution<int> nd(6, 12);
        std::uniform_real_distribution<double> dd(0.12, 0.4);
        Graph g = tu::random_graph(nd(rng), dd(rng), rng);
        int k = 2;
        auto c = solve_diamond(g, k, pol);
        CHECK(verify_certificate(g, Pattern::diamond(), c).ok);
        auto rep = nu_exact(g, Pattern::diamond());
        if (rep.nu < k) CHECK(c.kind == Certificate::Kind::Cover);
        if (c.kind == Certificate::Kind::Cover)
            CHECK((long long)c.cover.size() <= (long long)k * pol.g1(k));
    }
}

TEST_CASE("cover_or_pack_on_path stage-2 packing via tiny caps") {
    // six disjoint thetas on far-apart windows of a long path; with the
    // collection caps forced down, the bridge route must pack k = 2
    ThresholdPolicy pol;
    pol.set("ncap2", 6);
    pol.set("ncap3", 100000);  // keep stage 1 on the cover side
    int m = 50;
    Graph g(m + 6 * 4);
    for (int i = 0; i + 1 < m; ++i) g.add_edge(i, i + 1);
    std::vector<int> q(m);
    for (int i = 0; i < m; ++i) q[i] = i;
    for (int t = 0; t < 6; ++t) {
        int base = m + 4 * t;
        int a = 8 * t, b = 8 * t + 3;
        g.add_edge(a, base);
        g.add_edge(base, base + 1);
        g.add_edge(base + 1, base + 2);
        g.add_edge(base + 2, base + 3);
        g.add_edge(base + 3, base);
        g.add_edge(base + 2, b);
    }
    auto r = cover_or_pack_on_path(g, q, 2, pol);
    REQUIRE(r.is_packing);
    REQUIRE(r.models.size() == 2);
    for (const auto& mdl : r.models) CHECK(verify_model(g, Pattern::diamond(), mdl).ok);
    CHECK(vsets_disjoint(r.models[0].vertex_set(), r.models[1].vertex_set()));
}

TEST_CASE("cover_or_pack_on_path stage-3 packing via tiny caps") {
    // twelve far-apart pairs of interior paths with edge-sharing windows; the
    // pair route fires when its cap is tiny and stage 2 cannot collect
    ThresholdPolicy pol;
    pol.set("ncap2", 100000);
    pol.set("ncap3", 100000);
    pol.set("ncap4", 3);
    int m = 24 * 9;
    int extra = 24 * 4;
    Graph g(m + extra);
    for (int i = 0; i + 1 < m; ++i) g.add_edge(i, i + 1);
    std::vector<int> q(m);
    for (int i = 0; i < m; ++i) q[i] = i;
    for (int t = 0; t < 24; ++t) {
        int base = m + 4 * t;
        int a = 9 * t;
        // bridge 1: a .. a+3, bridge 2: a+1 .. a+4 (windows share edges)
        g.add_edge(a, base);
        g.add_edge(base, base + 1);
        g.add_edge(base + 1, a + 3);
        g.add_edge(a + 1, base + 2);
        g.add_edge(base + 2, base + 3);
        g.add_edge(base + 3, a + 4);
    }
    auto r = cover_or_pack_on_path(g, q, 2, pol);
    REQUIRE(r.is_packing);
    for (const auto& mdl : r.models) CHECK(verify_model(g, Pattern::diamond(), mdl).ok);
    CHECK(vsets_disjoint(r.models[0].vertex_set(), r.models[1].vertex_set()));
}

TEST_CASE("cover_or_pack_on_path stage-1 packs claws under a tiny cap") {
    ThresholdPolicy pol;
    pol.set("ncap3", 3);  // floors at 3k = 6 claws for k = 2
    int m = 40;
    Graph g(m + 7 * 6);
    for (int i = 0; i + 1 < m; ++i) g.add_edge(i, i + 1);
    std::vector<int> q(m);
    for (int i = 0; i < m; ++i) q[i] = i;
    for (int t = 0; t < 7; ++t) {
        int c = m + 6 * t;  // spider center with three legs of length 2
        int a = 6 * t;
        for (int l = 0; l < 3; ++l) {
            g.add_edge(c, c + 1 + l);
            g.add_edge(c + 1 + l, a + 2 * l);
        }
        (void)a;
    }
    auto r = cover_or_pack_on_path(g, q, 2, pol);
    REQUIRE(r.is_packing);
    for (const auto& mdl : r.models) CHECK(verify_model(g, Pattern::diamond(), mdl).ok);
}
