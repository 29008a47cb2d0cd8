#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "nerveforge/errors.h"
#include "nerveforge/graph.h"

using namespace nerveforge;

namespace {

// Independent caterpillar test: removing all leaves must leave a path (or
// nothing). Avoids the library's decomposition entirely.
bool caterpillar_oracle(const GraphSpec& t) {
    auto deg = t.degrees();
    std::vector<int> keep;
    for (int v = 0; v < t.n; ++v)
        if (deg[static_cast<std::size_t>(v)] > 1) keep.push_back(v);
    if (keep.size() <= 1) return true;
    int ends = 0;
    for (int v : keep) {
        int d = 0;
        for (int w : keep)
            if (t.has_edge(v, w)) ++d;
        if (d > 2) return false;
        if (d == 1) ++ends;
        if (d == 0) return false;
    }
    return ends == 2;
}

GraphSpec permuted(const GraphSpec& g, const std::vector<int>& perm, GraphKind kind) {
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges) {
        int a = perm[static_cast<std::size_t>(u)], b = perm[static_cast<std::size_t>(v)];
        edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    return GraphSpec::make(g.n, std::move(edges), kind);
}

}  // namespace

TEST_CASE("constructors and basic predicates") {
    GraphSpec p4 = GraphSpec::path(4);
    CHECK(p4.edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
    CHECK(p4.is_tree());
    CHECK(p4.triangle_free());
    CHECK(!p4.is_cycle());

    GraphSpec s5 = GraphSpec::star(5);
    CHECK(s5.degrees() == std::vector<int>{4, 1, 1, 1, 1});
    CHECK(s5.is_tree());

    GraphSpec c5 = GraphSpec::cycle(5);
    CHECK(c5.is_cycle());
    CHECK(!c5.is_tree());
    CHECK(c5.triangle_free());
    CHECK(!GraphSpec::cycle(3).triangle_free());

    GraphSpec disc = GraphSpec::make(4, {{0, 1}, {2, 3}}, GraphKind::general);
    CHECK(!disc.connected());
    CHECK(!disc.is_tree());

    CHECK_THROWS_AS(GraphSpec::make(3, {{0, 1}}, GraphKind::cycle), PreconditionError);
    CHECK_THROWS_AS(GraphSpec::make(4, {{0, 1}, {1, 2}}, GraphKind::tree), NotATreeError);
    CHECK_THROWS_AS(GraphSpec::make(3, {{0, 1}, {0, 1}}, GraphKind::general), PreconditionError);
    CHECK_THROWS_AS(GraphSpec::make(2, {{0, 2}}, GraphKind::general), PreconditionError);
}

TEST_CASE("tree census matches the known sequence") {
    // Unlabeled trees on 1..8 vertices: 1, 1, 1, 2, 3, 6, 11, 23.
    std::vector<std::size_t> want = {1, 1, 1, 2, 3, 6, 11, 23};
    for (int n = 1; n <= 8; ++n) {
        auto trees = all_trees(n);
        CHECK(trees.size() == want[static_cast<std::size_t>(n - 1)]);
        for (std::size_t i = 0; i < trees.size(); ++i) {
            CHECK(trees[i].is_tree());
            for (std::size_t j = i + 1; j < trees.size(); ++j)
                CHECK(!graphs_isomorphic(trees[i], trees[j]).has_value());
        }
    }
}

TEST_CASE("caterpillar census matches the closed form") {
    // Caterpillars on n >= 3 vertices: 2^(n-4) + 2^floor((n-4)/2).
    for (int n = 3; n <= 8; ++n) {
        std::size_t expect =
            (std::size_t{1} << std::max(0, n - 4)) + (std::size_t{1} << (std::max(0, n - 4) / 2));
        if (n == 3) expect = 1;  // the closed form starts at n = 4; P3 is the only tree
        std::size_t got = 0;
        for (const GraphSpec& t : all_trees(n)) {
            bool expect_cat = caterpillar_oracle(t);
            auto shape = caterpillar_decompose(t);
            CHECK(shape.has_value() == expect_cat);
            if (!shape) continue;
            ++got;
            // The decomposition must cover every vertex exactly once and use
            // real edges.
            std::set<int> seen(shape->spine.begin(), shape->spine.end());
            CHECK(seen.size() == shape->spine.size());
            CHECK(shape->leaves.size() == shape->spine.size());
            for (std::size_t s = 0; s + 1 < shape->spine.size(); ++s)
                CHECK(t.has_edge(shape->spine[s], shape->spine[s + 1]));
            for (std::size_t s = 0; s < shape->spine.size(); ++s)
                for (int leaf : shape->leaves[s]) {
                    CHECK(t.has_edge(shape->spine[s], leaf));
                    CHECK(t.degrees()[static_cast<std::size_t>(leaf)] == 1);
                    CHECK(seen.insert(leaf).second);
                }
            CHECK(seen.size() == static_cast<std::size_t>(t.n));
        }
        CHECK(got == expect);
    }
}

TEST_CASE("isomorphism finds a certified map and rejects non-isomorphic pairs") {
    std::mt19937_64 rng(7);
    for (const GraphSpec& t : all_trees(7)) {
        std::vector<int> perm(7);
        for (int i = 0; i < 7; ++i) perm[static_cast<std::size_t>(i)] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        GraphSpec shuffled = permuted(t, perm, GraphKind::tree);
        auto map = graphs_isomorphic(t, shuffled);
        REQUIRE(map.has_value());
        for (auto [u, v] : t.edges)
            CHECK(shuffled.has_edge((*map)[static_cast<std::size_t>(u)],
                                    (*map)[static_cast<std::size_t>(v)]));
    }
    CHECK(!graphs_isomorphic(GraphSpec::path(5), GraphSpec::star(5)).has_value());
    CHECK(!graphs_isomorphic(GraphSpec::path(4), GraphSpec::path(5)).has_value());
    CHECK(!graphs_isomorphic(GraphSpec::cycle(4), GraphSpec::path(4)).has_value());
}

TEST_CASE("connected graph census for tiny n") {
    // Connected graphs up to isomorphism: 1, 1, 2, 6, 21 for n = 1..5.
    std::vector<std::size_t> want = {1, 1, 2, 6, 21};
    for (int n = 1; n <= 5; ++n) {
        auto gs = all_connected_graphs(n);
        CHECK(gs.size() == want[static_cast<std::size_t>(n - 1)]);
        for (const GraphSpec& g : gs) CHECK(g.connected());
    }
}

TEST_CASE("bfs order puts parents before children") {
    for (const GraphSpec& t : all_trees(7)) {
        TreeOrder ord = bfs_tree_order(t);
        REQUIRE(ord.order.size() == 7);
        CHECK(ord.order[0] == 0);
        CHECK(ord.parent[0] == -1);
        std::vector<int> pos(7);
        for (int i = 0; i < 7; ++i) pos[static_cast<std::size_t>(ord.order[static_cast<std::size_t>(i)])] = i;
        for (int v = 1; v < 7; ++v) {
            int p = ord.parent[static_cast<std::size_t>(v)];
            CHECK(t.has_edge(v, p));
            CHECK(pos[static_cast<std::size_t>(p)] < pos[static_cast<std::size_t>(v)]);
        }
    }
}

TEST_CASE("labeled copies and edge masks") {
    GraphSpec p3 = GraphSpec::path(3);
    auto copies = labeled_copies(p3);
    CHECK(copies.size() == 3);  // choose the middle vertex
    CHECK(std::set<uint64_t>(copies.begin(), copies.end()).size() == 3);
    bool found_self = false;
    for (uint64_t m : copies) found_self |= (m == edge_mask(p3));
    CHECK(found_self);

    // Every copy of P4 on 4 labels has 3 edges; there are 4!/2 = 12 of them.
    auto p4 = labeled_copies(GraphSpec::path(4));
    CHECK(p4.size() == 12);
    for (uint64_t m : p4) CHECK(__builtin_popcountll(m) == 3);

    CHECK(pair_rank(4, 0, 1) == 0);
    CHECK(pair_rank(4, 2, 3) == 5);
    CHECK(pair_rank(4, 1, 2) == pair_rank(4, 2, 1));
    CHECK(labeled_copies(GraphSpec::path(12)).empty());  // over the cap
}

TEST_CASE("edge_key is canonical") {
    GraphSpec a = GraphSpec::make(3, {{1, 2}, {0, 1}}, GraphKind::tree);
    GraphSpec b = GraphSpec::path(3);
    CHECK(a.edge_key() == b.edge_key());
    CHECK(a.edge_key() != GraphSpec::star(3).edge_key());
}
