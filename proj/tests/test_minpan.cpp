#include <doctest.h>

#include "pancover/minpan.hpp"
#include "testutil.hpp"

using namespace pancover;
namespace tu = pancover::testutil;

TEST_CASE("find_min_pan on plain pans and cliques") {
    Graph pan = tu::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {1, 3}});
    auto r = find_min_pan(pan, 1);
    REQUIRE(r.has_value());
    CHECK(r->order() == 4);

    CHECK_FALSE(find_min_pan(complete_graph(4), 1).has_value());
    CHECK_FALSE(find_min_pan(path_graph(6), 1).has_value());

    Graph pan2 = tu::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 4}});
    auto r2 = find_min_pan(pan2, 2);
    REQUIRE(r2.has_value());
    CHECK(r2->order() == 5);
}

TEST_CASE("find_min_pan equals the exhaustive subset minimum") {
    std::mt19937 rng(17);
    for (int p : {1, 2}) {
        for (int t = 0; t < 250; ++t) {
            std::uniform_int_distribution<int> nd(5, 10);
            std::uniform_real_distribution<double> dd(0.15, 0.5);
            Graph g = tu::random_graph(nd(rng), dd(rng), rng);
            int brute = tu::brute_min_pan_order(g, p);
            auto r = find_min_pan(g, p);
            if (brute < 0) {
                CHECK_FALSE(r.has_value());
            } else {
                REQUIRE(r.has_value());
                CHECK(r->order() == brute);
            }
        }
    }
}

TEST_CASE("find_min_pan is deterministic") {
    std::mt19937 rng(29);
    Graph g = tu::random_graph(12, 0.3, rng);
    auto a = find_min_pan(g, 1);
    auto b = find_min_pan(g, 1);
    REQUIRE(a.has_value());
    CHECK(a->tail == b->tail);
    CHECK(a->cycle == b->cycle);
}

TEST_CASE("extract_pan1 follows the re-entry case split") {
    // C4 plus v adjacent only to c[2]
    Graph g1 = tu::from_edges(5, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {2, 4}});
    auto p1 = extract_pan1(g1, {0, 1, 2, 3}, 4);
    CHECK(p1.tail == std::vector<int>{4});
    CHECK(p1.cycle.size() == 4);

    // C6 plus v adjacent to c[2] and c[4]: pan on {v, c1..c4}
    Graph g2 = tu::from_edges(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {2, 6}, {4, 6}});
    auto p2 = extract_pan1(g2, {0, 1, 2, 3, 4, 5}, 6);
    CHECK(p2.vertex_set() == VertexSet{1, 2, 3, 4, 6});

    CHECK_THROWS_AS(extract_pan1(g1, {0, 1, 2, 3}, 3), PreconditionError);
}

TEST_CASE("extract_pan1 on randomized instances verifies") {
    std::mt19937 rng(31);
    int built = 0;
    for (int t = 0; t < 400 && built < 120; ++t) {
        std::uniform_int_distribution<int> md(4, 8);
        int m = md(rng);
        Graph g(m + 1);
        std::vector<int> cyc(m);
        for (int i = 0; i < m; ++i) cyc[i] = i;
        for (int i = 0; i < m; ++i) g.add_edge(i, (i + 1) % m);
        int v = m;
        g.add_edge(v, 2);
        std::uniform_real_distribution<double> coin(0, 1);
        for (int i = 4; i < m; ++i)
            if (coin(rng) < 0.4) g.add_edge(v, i);
        auto pan = extract_pan1(g, cyc, v);  // verified internally
        ++built;
        CHECK(pan.order() <= m + 1);
    }
    CHECK(built >= 100);
}

TEST_CASE("extract_pan2 handles the re-entry case analysis") {
    // clean attachment
    Graph g(9);
    for (int i = 0; i < 5; ++i) g.add_edge(i, (i + 1) % 5);
    g.add_edge(1, 5);
    g.add_edge(5, 6);
    g.add_edge(6, 7);
    g.add_edge(7, 8);
    auto pan = extract_pan2(g, {0, 1, 2, 3, 4}, {5, 6, 7, 8});
    CHECK(pan.tail == std::vector<int>{6, 5});

    // C5 where w1 also sees c[4]: one internal vertex on the far arc
    Graph g2(9);
    for (int i = 0; i < 5; ++i) g2.add_edge(i, (i + 1) % 5);
    g2.add_edge(1, 5);
    g2.add_edge(5, 6);
    g2.add_edge(6, 7);
    g2.add_edge(7, 8);
    g2.add_edge(4, 5);
    auto pan2 = extract_pan2(g2, {0, 1, 2, 3, 4}, {5, 6, 7, 8});
    CHECK(pan2.order() == 6);
}

TEST_CASE("extract_pan2 randomized instances verify") {
    std::mt19937 rng(37);
    int built = 0;
    for (int t = 0; t < 600 && built < 150; ++t) {
        std::uniform_int_distribution<int> md(4, 9);
        int m = md(rng);
        Graph g(m + 4);
        std::vector<int> cyc(m);
        for (int i = 0; i < m; ++i) cyc[i] = i;
        for (int i = 0; i < m; ++i) g.add_edge(i, (i + 1) % m);
        int w1 = m, w2 = m + 1, w3 = m + 2, w4 = m + 3;
        g.add_edge(1, w1);
        g.add_edge(w1, w2);
        g.add_edge(w2, w3);
        g.add_edge(w3, w4);
        std::uniform_real_distribution<double> coin(0, 1);
        std::uniform_int_distribution<int> wd(0, 3);
        for (int i = 4; i < m; ++i)
            if (coin(rng) < 0.5) {
                int w = m + wd(rng);
                if (!g.has_edge(i, w)) g.add_edge(i, w);
            }
        try {
            auto pan = extract_pan2(g, cyc, {w1, w2, w3, w4});
            ++built;
            CHECK(pan.order() >= 5);
        } catch (const PreconditionError&) {
            // the random extras broke the preconditions; skip
        }
    }
    CHECK(built >= 60);
}

TEST_CASE("induced_cycle_keeping_marked_edge") {
    Graph c5 = cycle_graph(5);
    Graph marked(5);
    marked.add_edge(0, 1);
    auto r = induced_cycle_keeping_marked_edge(c5, {0, 1, 2, 3, 4}, marked);
    CHECK(r.size() == 5);  // already induced: fixed point

    Graph g = cycle_graph(5);
    g.add_edge(0, 2);
    Graph mk(5);
    mk.add_edge(0, 1);
    auto r2 = induced_cycle_keeping_marked_edge(g, {0, 1, 2, 3, 4}, mk);
    CHECK(vset_sorted(r2) == VertexSet{0, 1, 2});

    std::mt19937 rng(41);
    for (int t = 0; t < 200; ++t) {
        std::uniform_int_distribution<int> md(4, 10);
        int m = md(rng);
        Graph host(m);
        std::vector<int> cyc(m);
        for (int i = 0; i < m; ++i) cyc[i] = i;
        for (int i = 0; i < m; ++i) host.add_edge(i, (i + 1) % m);
        std::uniform_real_distribution<double> coin(0, 1);
        for (int i = 0; i < m; ++i)
            for (int j = i + 2; j < m; ++j) {
                if (i == 0 && j == m - 1) continue;
                if (coin(rng) < 0.2) host.add_edge(i, j);
            }
        Graph mark(m);
        mark.add_edge(2, 3);
        auto rr = induced_cycle_keeping_marked_edge(host, cyc, mark);
        CHECK(is_induced_cycle_of(host, rr));
        bool has = false;
        for (size_t i = 0; i < rr.size(); ++i)
            if (mark.has_edge(rr[i], rr[(i + 1) % rr.size()])) has = true;
        CHECK(has);
        CHECK(rr.size() <= (size_t)m);
    }
}
