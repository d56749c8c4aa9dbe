#include <doctest.h>

#include "pancover/gallai.hpp"
#include "pancover/matching.hpp"
#include "testutil.hpp"

using namespace pancover;
namespace tu = pancover::testutil;

TEST_CASE("blossom matching equals brute force on small graphs") {
    std::mt19937 rng(5);
    for (int t = 0; t < 400; ++t) {
        std::uniform_int_distribution<int> nd(2, 10);
        std::uniform_real_distribution<double> dd(0.1, 0.7);
        Graph g = tu::random_graph(nd(rng), dd(rng), rng);
        CHECK(matching_size(max_matching(g)) == tu::brute_max_matching(g));
    }
    // odd cycles force blossom handling
    for (int n : {3, 5, 7, 9}) CHECK(matching_size(max_matching(cycle_graph(n))) == n / 2);
    CHECK(matching_size(max_matching(tu::from_edges(
              9, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}, {5, 3}, {1, 6}, {6, 7}, {7, 8}}))) ==
          4);
}

TEST_CASE("max_apath_packing basics") {
    // path a-x-b with A = {a, b}
    Graph g = path_graph(3);
    auto p = max_apath_packing(g, {0, 2});
    REQUIRE(p.size() == 1);
    CHECK(vset_sorted(p[0]) == VertexSet{0, 1, 2});

    // K4 with A = V: two single-edge paths
    CHECK(max_apath_packing(complete_graph(4), {0, 1, 2, 3}).size() == 2);

    // star with three leaves in A
    Graph star = tu::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK(max_apath_packing(star, {1, 2, 3}).size() == 1);
}

TEST_CASE("max_apath_packing equals the exhaustive maximum") {
    std::mt19937 rng(13);
    for (int t = 0; t < 300; ++t) {
        std::uniform_int_distribution<int> nd(3, 12);
        std::uniform_real_distribution<double> dd(0.1, 0.5);
        int n = nd(rng);
        Graph g = tu::random_graph(n, dd(rng), rng);
        std::uniform_int_distribution<int> ad(1, std::min(6, n));
        int asz = ad(rng);
        std::vector<int> ids(n);
        for (int i = 0; i < n; ++i) ids[i] = i;
        std::shuffle(ids.begin(), ids.end(), rng);
        VertexSet a = vset_sorted(std::vector<int>(ids.begin(), ids.begin() + asz));
        auto packing = max_apath_packing(g, a);
        CHECK((int)packing.size() == tu::brute_max_apaths(g, a));
        // every reported path is a real A-path, pairwise disjoint
        for (size_t i = 0; i < packing.size(); ++i) {
            const auto& path = packing[i];
            CHECK(is_path_of(g, path));
            CHECK(vset_contains(a, path.front()));
            CHECK(vset_contains(a, path.back()));
            for (size_t j = 1; j + 1 < path.size(); ++j) CHECK_FALSE(vset_contains(a, path[j]));
            for (size_t j = i + 1; j < packing.size(); ++j)
                CHECK(vsets_disjoint(vset_sorted(packing[i]), vset_sorted(packing[j])));
        }
    }
}

TEST_CASE("gallai_apaths returns packings or small complete covers") {
    // star with 3 leaves in A, k = 2: the center covers everything
    Graph star = tu::from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
    auto r = gallai_apaths(star, {1, 2, 3}, 2);
    CHECK_FALSE(r.is_packing);
    CHECK(r.cover.size() <= 2);
    CHECK(apath_cover_valid(star, {1, 2, 3}, r.cover));

    Graph path = path_graph(3);
    auto r2 = gallai_apaths(path, {0, 2}, 1);
    CHECK(r2.is_packing);
    CHECK(r2.paths.size() == 1);
}

TEST_CASE("gallai_apaths contract on random graphs") {
    std::mt19937 rng(19);
    for (int t = 0; t < 250; ++t) {
        std::uniform_int_distribution<int> nd(3, 12);
        std::uniform_real_distribution<double> dd(0.1, 0.5);
        int n = nd(rng);
        Graph g = tu::random_graph(n, dd(rng), rng);
        std::uniform_int_distribution<int> ad(1, std::min(6, n));
        std::vector<int> ids(n);
        for (int i = 0; i < n; ++i) ids[i] = i;
        std::shuffle(ids.begin(), ids.end(), rng);
        VertexSet a = vset_sorted(std::vector<int>(ids.begin(), ids.begin() + ad(rng)));
        std::uniform_int_distribution<int> kd(1, 4);
        int k = kd(rng);
        auto r = gallai_apaths(g, a, k);
        if (r.is_packing) {
            CHECK((int)r.paths.size() == k);
        } else {
            CHECK((int)r.cover.size() <= 2 * k - 2);
            CHECK(apath_cover_valid(g, a, r.cover));
        }
    }
}
