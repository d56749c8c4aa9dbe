#include <doctest.h>

#include <functional>
#include <set>

#include "pancover/aclaw.hpp"
#include "pancover/regular.hpp"
#include "pancover/simonovits.hpp"
#include "testutil.hpp"

using namespace pancover;
namespace tu = pancover::testutil;

namespace {

void check_cycles_of(const MultiGraph& m, const std::vector<std::vector<int>>& cycles, int k) {
    REQUIRE((int)cycles.size() == k);
    VertexSet used;
    std::multiset<std::pair<int, int>> bag;
    for (auto [u, v] : m.edges) bag.insert(std::minmax(u, v));
    for (const auto& c : cycles) {
        CHECK(vset_sorted(c).size() == c.size());
        CHECK(vsets_disjoint(vset_sorted(c), used));
        used = vset_union(used, vset_sorted(c));
        if (c.size() >= 2) {
            auto local = bag;
            for (size_t i = 0; i < c.size(); ++i) {
                auto key = std::minmax(c[i], c[(i + 1) % c.size()]);
                auto it = local.find(key);
                REQUIRE(it != local.end());
                local.erase(it);
            }
        }
    }
}

}  // namespace

TEST_CASE("simonovits_pack on easy instances") {
    ThresholdPolicy pol;
    auto one = simonovits_pack(MultiGraph::from_graph(complete_graph(4)), 1, pol);
    check_cycles_of(MultiGraph::from_graph(complete_graph(4)), one, 1);

    Graph two_k4(8);
    for (int b : {0, 4})
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) two_k4.add_edge(b + i, b + j);
    pol.set("simonovits", 1);  // two K4s have only 8 core vertices
    auto two = simonovits_pack(MultiGraph::from_graph(two_k4), 2, pol);
    check_cycles_of(MultiGraph::from_graph(two_k4), two, 2);

    Graph petersen = tu::from_edges(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                                         {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                                         {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
    auto pans = simonovits_pack(MultiGraph::from_graph(petersen), 2, pol);
    check_cycles_of(MultiGraph::from_graph(petersen), pans, 2);
    // the Petersen graph does contain two disjoint 5-cycles
    CHECK(pans[0].size() == 5);
    CHECK(pans[1].size() == 5);

    ThresholdPolicy strict;
    CHECK_THROWS_AS(simonovits_pack(MultiGraph::from_graph(cycle_graph(5)), 2, strict),
                    PreconditionError);
}

TEST_CASE("simonovits_pack on random cubic multigraphs") {
    std::mt19937 rng(43);
    ThresholdPolicy pol;
    for (int k : {2, 3}) {
        long long need = pol.simonovits(k);
        int n = (int)need + ((int)need % 2);
        for (int t = 0; t < 20; ++t) {
            auto m = tu::random_cubic_multigraph(n, rng);
            auto cycles = simonovits_pack(m, k, pol);
            check_cycles_of(m, cycles, k);
        }
    }
}

TEST_CASE("check_regular_partition on the definition's cases") {
    std::vector<VertexSet> parallel = {{1, 2}, {3, 4}, {5, 6}};
    RegularPartition one{1, 6, {}, {RpTag::RP2}};
    CHECK(check_regular_partition(parallel, one));

    std::vector<VertexSet> nested = {{1, 6}, {2, 5}, {3, 4}};
    RegularPartition two{1, 6, {4}, {RpTag::RP2, RpTag::RP3}};
    CHECK(check_regular_partition(nested, two));

    std::vector<VertexSet> bad = {{1, 2}, {3}};
    RegularPartition t1{1, 3, {}, {RpTag::RP2}};
    CHECK_FALSE(check_regular_partition(bad, t1));  // trace sizes differ

    std::vector<VertexSet> same = {{2, 5}, {2, 5}};
    RegularPartition rp1{2, 5, {}, {RpTag::RP1}};
    CHECK(check_regular_partition(same, rp1));
}

TEST_CASE("find_regular_subsequence basics") {
    std::vector<VertexSet> parallel = {{1, 2}, {3, 4}, {5, 6}};
    auto r = find_regular_subsequence(parallel, 2, 3, 100);
    REQUIRE(r.has_value());
    CHECK(r->indices == std::vector<int>{0, 1, 2});
    CHECK(r->partition.order() == 1);

    std::vector<VertexSet> nested = {{1, 6}, {2, 5}, {3, 4}};
    auto r2 = find_regular_subsequence(nested, 2, 3, 100);
    REQUIRE(r2.has_value());
    CHECK(r2->partition.order() == 2);

    CHECK_THROWS_AS(find_regular_subsequence(parallel, 2, 3, 2), PreconditionError);
}

TEST_CASE("find_regular_subsequence agrees with exhaustive search") {
    std::mt19937 rng(47);
    auto exhaustive = [&](const std::vector<VertexSet>& seq, int n, int l) {
        // try all subsequences, all cut placements
        std::vector<int> idx(l);
        std::function<bool(int, int)> rec = [&](int d, int from) -> bool {
            if (d == l) {
                std::vector<VertexSet> sub;
                for (int i : idx) sub.push_back(seq[i]);
                // existence check via the library's checker over all partitions
                VertexSet coords;
                for (auto& s : sub)
                    for (int x : s) coords.push_back(x);
                coords = vset_sorted(std::move(coords));
                std::vector<int> cands(coords.begin() + 1, coords.end());
                for (int parts = 1; parts <= n; ++parts) {
                    std::vector<int> cuts(parts - 1);
                    std::function<bool(int, int)> pick = [&](int e, int cfrom) -> bool {
                        if (e == parts - 1) {
                            // tags per part: try all assignments
                            int np = parts;
                            std::vector<RpTag> tags(np, RpTag::RP1);
                            std::function<bool(int)> tg = [&](int i) -> bool {
                                if (i == np) {
                                    RegularPartition part{coords.front(), coords.back(), cuts, tags};
                                    return check_regular_partition(sub, part);
                                }
                                for (RpTag tt : {RpTag::RP1, RpTag::RP2, RpTag::RP3}) {
                                    tags[i] = tt;
                                    if (tg(i + 1)) return true;
                                }
                                return false;
                            };
                            return tg(0);
                        }
                        for (int c = cfrom; c < (int)cands.size(); ++c) {
                            cuts[e] = cands[c];
                            if (pick(e + 1, c + 1)) return true;
                        }
                        return false;
                    };
                    if (pick(0, 0)) return true;
                }
                return false;
            }
            for (int i = from; (int)seq.size() - i >= l - d; ++i) {
                idx[d] = i;
                if (rec(d + 1, i + 1)) return true;
            }
            return false;
        };
        return rec(0, 0);
    };
    for (int t = 0; t < 200; ++t) {
        std::uniform_int_distribution<int> cd(1, 20);
        std::uniform_int_distribution<int> szd(4, 7);
        int cnt = szd(rng);
        std::vector<VertexSet> seq;
        for (int i = 0; i < cnt; ++i) {
            VertexSet s;
            while (s.size() < 3) s = vset_sorted({cd(rng), cd(rng), cd(rng)});
            seq.push_back(s);
        }
        auto mine = find_regular_subsequence(seq, 3, 4, 1000);
        bool brute = exhaustive(seq, 3, 4);
        CHECK(mine.has_value() == brute);
        if (mine) {
            std::vector<VertexSet> sub;
            for (int i : mine->indices) sub.push_back(seq[i]);
            CHECK(check_regular_partition(sub, mine->partition));
        }
    }
}

TEST_CASE("find_aclaw on spiders, paths, and random graphs") {
    // spider: center with three legs of length 2 into A
    Graph spider = tu::from_edges(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
    VertexSet a = {2, 4, 6};
    auto claw = find_aclaw(spider, a);
    REQUIRE(claw.has_value());
    CHECK(claw->center == 0);
    CHECK(verify_aclaw(spider, a, *claw));

    CHECK_FALSE(find_aclaw(path_graph(6), {0, 5}).has_value());

    std::mt19937 rng(53);
    for (int t = 0; t < 250; ++t) {
        std::uniform_int_distribution<int> nd(4, 9);
        std::uniform_real_distribution<double> dd(0.15, 0.4);
        int n = nd(rng);
        Graph g = tu::random_graph(n, dd(rng), rng);
        std::uniform_int_distribution<int> ad(1, n / 2 + 1);
        std::vector<int> ids(n);
        for (int i = 0; i < n; ++i) ids[i] = i;
        std::shuffle(ids.begin(), ids.end(), rng);
        VertexSet aa = vset_sorted(std::vector<int>(ids.begin(), ids.begin() + ad(rng)));
        auto c = find_aclaw(g, aa);
        CHECK(c.has_value() == tu::brute_has_aclaw(g, aa));
        if (c) CHECK(verify_aclaw(g, aa, *c));
    }
}

TEST_CASE("claws_from_leafy_forest") {
    // one balanced binary tree with 8 leaves, k = 1
    Graph t(15);
    for (int i = 0; i + 1 < 8; ++i) {
        t.add_edge(i, 2 * i + 1);
        t.add_edge(i, 2 * i + 2);
    }
    auto one = claws_from_leafy_forest(t, 1);
    REQUIRE(one.size() == 1);
    VertexSet leaves;
    for (int v = 0; v < t.n(); ++v)
        if (t.degree(v) == 1) leaves.push_back(v);
    CHECK(verify_aclaw(t, leaves, one[0]));

    // k disjoint 3-stars
    Graph stars(12);
    for (int s = 0; s < 3; ++s)
        for (int l = 1; l < 4; ++l) stars.add_edge(4 * s, 4 * s + l);
    auto three = claws_from_leafy_forest(stars, 3);
    CHECK(three.size() == 3);

    CHECK_THROWS_AS(claws_from_leafy_forest(path_graph(4), 1), PreconditionError);
}

TEST_CASE("claws_from_leafy_forest on random subcubic forests") {
    std::mt19937 rng(59);
    int done = 0;
    for (int t = 0; t < 500 && done < 120; ++t) {
        // grow a random subcubic forest
        std::uniform_int_distribution<int> nd(8, 26);
        int n = nd(rng);
        Graph f(n);
        std::uniform_int_distribution<int> pd(0, n - 1);
        std::vector<int> deg(n, 0);
        for (int v = 1; v < n; ++v) {
            int p = pd(rng) % v;
            if (deg[p] >= 3) continue;
            f.add_edge(v, p);
            deg[p]++;
            deg[v]++;
        }
        int leaves = 0;
        bool good = true;
        for (const auto& comp : components(f)) {
            if (comp.size() == 1 && f.degree(comp[0]) == 0) continue;
            bool has3 = false;
            for (int v : comp)
                if (f.degree(v) == 3) has3 = true;
            if (!has3) good = false;
        }
        for (int v = 0; v < n; ++v)
            if (f.degree(v) == 1) ++leaves;
        if (!good || leaves < 6) continue;
        int k = leaves / 6;
        auto claws = claws_from_leafy_forest(f, k);
        REQUIRE((int)claws.size() == k);
        VertexSet lset;
        for (int v = 0; v < n; ++v)
            if (f.degree(v) == 1) lset.push_back(v);
        VertexSet used;
        for (const auto& c : claws) {
            CHECK(verify_aclaw(f, lset, c));
            CHECK(vsets_disjoint(c.vertex_set(), used));
            used = vset_union(used, c.vertex_set());
        }
        ++done;
    }
    CHECK(done >= 100);
}

TEST_CASE("aclaw_ep trivial covers and spider packings") {
    // no vertex outside A: empty cover
    Graph k3 = complete_graph(3);
    auto r = aclaw_ep(k3, {0, 1, 2}, 1);
    CHECK_FALSE(r.is_packing);
    CHECK(r.cover.empty());

    // k disjoint spiders
    Graph g(14);
    VertexSet a;
    for (int s = 0; s < 2; ++s) {
        int base = 7 * s;
        g.add_edge(base, base + 1);
        g.add_edge(base + 1, base + 2);
        g.add_edge(base, base + 3);
        g.add_edge(base + 3, base + 4);
        g.add_edge(base, base + 5);
        g.add_edge(base + 5, base + 6);
        a.push_back(base + 2);
        a.push_back(base + 4);
        a.push_back(base + 6);
    }
    a = vset_sorted(std::move(a));
    auto r2 = aclaw_ep(g, a, 2);
    REQUIRE(r2.is_packing);
    CHECK(r2.claws.size() == 2);
}

TEST_CASE("aclaw_ep contract on random graphs") {
    std::mt19937 rng(61);
    for (int t = 0; t < 250; ++t) {
        std::uniform_int_distribution<int> nd(4, 14);
        std::uniform_real_distribution<double> dd(0.12, 0.45);
        int n = nd(rng);
        Graph g = tu::random_graph(n, dd(rng), rng);
        std::uniform_int_distribution<int> ad(1, n / 2 + 1);
        std::vector<int> ids(n);
        for (int i = 0; i < n; ++i) ids[i] = i;
        std::shuffle(ids.begin(), ids.end(), rng);
        VertexSet a = vset_sorted(std::vector<int>(ids.begin(), ids.begin() + ad(rng)));
        std::uniform_int_distribution<int> kd(1, 2);
        int k = kd(rng);
        auto r = aclaw_ep(g, a, k);
        if (r.is_packing) {
            REQUIRE((int)r.claws.size() == k);
            VertexSet used;
            for (const auto& c : r.claws) {
                CHECK(verify_aclaw(g, a, c));
                CHECK(vsets_disjoint(c.vertex_set(), used));
                used = vset_union(used, c.vertex_set());
            }
        } else {
            CHECK((long long)r.cover.size() <= 14LL * k);
            auto sub = remove_vertices(g, r.cover);
            VertexSet suba;
            for (int i = 0; i < sub.graph.n(); ++i)
                if (vset_contains(a, sub.to_orig[i])) suba.push_back(i);
            CHECK_FALSE(find_aclaw(sub.graph, suba).has_value());
        }
    }
}

TEST_CASE("leaf count bound for trees without degree-2 vertices") {
    for (int n = 2; n <= 10; ++n) {
        for (const Graph& g : tu::all_trees(n)) {
            bool no_deg2 = true;
            for (int v = 0; v < n; ++v)
                if (g.degree(v) == 2) no_deg2 = false;
            if (!no_deg2) continue;
            int leaves = 0, internal = 0;
            for (int v = 0; v < n; ++v)
                (g.degree(v) <= 1 ? leaves : internal)++;
            CHECK(leaves >= internal - 2);
        }
    }
}
