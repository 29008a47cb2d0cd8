#include <doctest.h>

#include <algorithm>

#include "es16_fixture.h"
#include "nerveforge/errors.h"
#include "nerveforge/nerve.h"
#include "nerveforge/randgen.h"
#include "nerveforge/treebuild.h"

using namespace nerveforge;

namespace {

PointSet concat(const PointSet& a, const PointSet& b) {
    PointSet out = a;
    for (const Point& p : b.points) out.points.push_back(p);
    return out;
}

IndexList iota_list(int n) {
    IndexList out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = i;
    return out;
}

// Spider with three legs: not a caterpillar, so the pipeline cannot take the
// direct route. Vertex 0 is the center.
GraphSpec spider(int a, int b, int c) {
    std::vector<std::pair<int, int>> edges;
    int next = 1;
    for (int len : {a, b, c}) {
        int prev = 0;
        for (int i = 0; i < len; ++i) {
            edges.emplace_back(std::min(prev, next), std::max(prev, next));
            prev = next++;
        }
    }
    return GraphSpec::make(next, std::move(edges), GraphKind::tree);
}

void check_exact_graph(const PointSet& ps, const Partition& part, const GraphSpec& target) {
    part.validate(ps);
    GraphSpec got = intersection_graph(ps, part);
    CHECK(got.n == target.n);
    CHECK(got.edges == target.edges);
}

}  // namespace

TEST_CASE("trees on convex polygons: every class, labeled exactly") {
    for (int n = 2; n <= 7; ++n) {
        for (const GraphSpec& tree : all_trees(n)) {
            PointSet ps = random_points(2 * n, 2, 7000u + static_cast<uint64_t>(n), RandomMode::convex_position);
            PartitionResult res = tree_partition_convex_2d(tree, ps);
            check_exact_graph(ps, res.partition, tree);
            for (const IndexList& part : res.partition.parts) CHECK(part.size() == 2);
            CHECK(res.trace.of_kind<LeafLineEvent>().size() == static_cast<std::size_t>(n - 1));
        }
    }
}

TEST_CASE("leaf line events record strict separations of the live points") {
    GraphSpec tree = GraphSpec::path(5);
    PointSet ps = random_points(10, 2, 321u, RandomMode::convex_position);
    PartitionResult res = tree_partition_convex_2d(tree, ps);
    for (const LeafLineEvent& e : res.trace.of_kind<LeafLineEvent>()) {
        CHECK(e.leaf_part != e.parent_part);
        CHECK(tree.has_edge(e.leaf_part, e.parent_part));
        // The recorded boundary passes through the removed pair.
        CHECK(e.boundary.side(ps[e.pair_low]) == 0);
        CHECK(e.boundary.side(ps[e.pair_high]) == 0);
    }
}

TEST_CASE("planar replay preserves the nerve and the base assignment") {
    for (int n : {3, 5, 7}) {
        for (uint64_t trial = 0; trial < 3; ++trial) {
            GraphSpec tree = all_trees(n).back();
            PointSet base = random_points(2 * n, 2, 900u + trial * 13 + static_cast<uint64_t>(n),
                                          RandomMode::convex_position);
            PartitionResult res = tree_partition_convex_2d(tree, base);
            PointSet extras = random_points(12, 2, 4400u + trial + static_cast<uint64_t>(n),
                                            RandomMode::uniform_box);
            PointSet full = concat(base, extras);
            Partition ext = extend_partition_2d(full, iota_list(2 * n), res);
            ext.validate(full);
            CHECK(ext.restricted(iota_list(2 * n)).parts == res.partition.parts);
            check_exact_graph(full, ext, tree);
            CHECK(nerve_complex(full, ext) == nerve_complex(base, res.partition));
        }
    }
}

TEST_CASE("cyclic construction realizes trees in higher dimensions") {
    for (int d : {2, 3, 4}) {
        for (int n : {2, 4, 5}) {
            int m = (n - 1) * (d + 1) + 1;
            auto trees = all_trees(n);
            const GraphSpec& tree = trees.front();
            PointSet ps = random_points(m, d, 60u + static_cast<uint64_t>(10 * n + d),
                                        RandomMode::moment_curve);
            PartitionResult res = tree_partition_cyclic(tree, ps);
            check_exact_graph(ps, res.partition, tree);
            // One split event per non-root vertex.
            CHECK(res.trace.of_kind<SubpolytopeSplitEvent>().size() == static_cast<std::size_t>(n - 1));
            for (const SubpolytopeSplitEvent& e : res.trace.of_kind<SubpolytopeSplitEvent>())
                CHECK(e.r_side.size() == static_cast<std::size_t>(d + 1));
        }
    }
}

TEST_CASE("cyclic replay absorbs box extras in any dimension") {
    for (int d : {2, 3}) {
        for (int n : {3, 5}) {
            int m = (n - 1) * (d + 1) + 1;
            const GraphSpec tree = all_trees(n)[all_trees(n).size() / 2];
            PointSet base = random_points(m, d, 81u + static_cast<uint64_t>(10 * n + d),
                                          RandomMode::moment_curve);
            PartitionResult res = tree_partition_cyclic(tree, base);
            PointSet extras = random_points(10, d, 0xb81u ^ static_cast<uint64_t>(10 * n + d),
                                            RandomMode::uniform_box);
            PointSet full = concat(base, extras);
            Partition ext = extend_partition_cyclic(full, iota_list(m), res);
            ext.validate(full);
            CHECK(ext.restricted(iota_list(m)).parts == res.partition.parts);
            check_exact_graph(full, ext, tree);
        }
    }
}

TEST_CASE("caterpillar construction on generic points, with surplus") {
    for (int d : {2, 3}) {
        for (int n : {2, 4, 6}) {
            int need = (d + 1) * (n - 1) + 1;
            for (const GraphSpec& tree : all_trees(n)) {
                if (!caterpillar_decompose(tree)) continue;
                PointSet ps = random_points(need + 3, d, 500u + static_cast<uint64_t>(10 * n + d),
                                            RandomMode::uniform_box);
                PartitionResult res = caterpillar_partition(tree, ps);
                check_exact_graph(ps, res.partition, tree);
            }
        }
    }
}

TEST_CASE("caterpillar construction rejects non-caterpillars and short input") {
    GraphSpec sp = spider(2, 2, 2);
    PointSet ps = random_points(19, 2, 11u, RandomMode::uniform_box);
    CHECK_THROWS_AS(caterpillar_partition(sp, ps), NotCaterpillarError);

    GraphSpec p4 = GraphSpec::path(4);
    PointSet few = random_points(5, 2, 11u, RandomMode::uniform_box);
    CHECK_THROWS_AS(caterpillar_partition(p4, few), TooFewPointsError);
}

TEST_CASE("stars on generic planar points") {
    for (int n : {3, 4, 5, 6}) {
        PointSet ps = random_points(2 * n, 2, 7u + static_cast<uint64_t>(n), RandomMode::uniform_box);
        GraphSpec star = GraphSpec::star(n);
        PartitionResult res = star_partition_2d(star, ps);
        check_exact_graph(ps, res.partition, star);
    }
}

TEST_CASE("pair_across_line yields disjoint crossing segments") {
    PointSet ps = random_points(12, 2, 29u, RandomMode::uniform_box);
    // Split by the median of x = 0 ordering: take a vertical line between the
    // 6th and 7th point by x-coordinate.
    IndexList order = iota_list(12);
    std::sort(order.begin(), order.end(), [&](Index a, Index b) { return ps[a][0] < ps[b][0]; });
    Rat cut = (ps[order[5]][0] + ps[order[6]][0]) / 2;
    Hyperplane line{{Rat(1), Rat(0)}, cut};
    IndexList left(order.begin(), order.begin() + 6), right(order.begin() + 6, order.end());
    auto pairs = pair_across_line(ps, left, right, line);
    REQUIRE(pairs.size() == 6);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        CHECK(line.side(ps[pairs[i].first]) != line.side(ps[pairs[i].second]));
        for (std::size_t j = i + 1; j < pairs.size(); ++j)
            CHECK(!segments_intersect(ps[pairs[i].first], ps[pairs[i].second],
                                      ps[pairs[j].first], ps[pairs[j].second]));
    }
}

TEST_CASE("pipeline picks the direct route for caterpillars") {
    PointSet ps = random_points(16, 2, 303u, RandomMode::uniform_box);
    GraphSpec p5 = GraphSpec::path(5);
    PipelineResult res = tverberg_tree_pipeline(ps, p5);
    CHECK(res.route == "caterpillar");
    CHECK(res.base_subset.empty());
    check_exact_graph(ps, res.partition, p5);
}

TEST_CASE("pipeline falls back to a planted convex subset") {
    GraphSpec sp = spider(2, 2, 2);  // 7 vertices, needs a 14-point convex base
    PointSet planted = random_points(14, 2, 42u, RandomMode::convex_position);
    PointSet noise = random_points(6, 2, 43u, RandomMode::uniform_box);
    PointSet full = concat(planted, noise);
    PipelineResult res = tverberg_tree_pipeline(full, sp);
    CHECK(res.route == "convex-subset");
    CHECK(res.base_subset.size() == 14);
    check_exact_graph(full, res.partition, sp);
}

TEST_CASE("pipeline uses the cyclic route in three dimensions") {
    GraphSpec sp = spider(2, 2, 2);  // needs (7-1)*4+1 = 25 base points
    PointSet planted = random_points(25, 3, 88u, RandomMode::moment_curve);
    PointSet noise = random_points(5, 3, 89u, RandomMode::uniform_box);
    PointSet full = concat(planted, noise);
    PipelineResult res = tverberg_tree_pipeline(full, sp);
    CHECK(res.route == "cyclic-subset");
    CHECK(res.base_subset.size() == 25);
    check_exact_graph(full, res.partition, sp);
}

TEST_CASE("pipeline reports the subset size it could not find") {
    // Sixteen points with no six in convex position cannot host an 8-vertex
    // spider, which needs a 16-point convex base.
    PointSet ps = nerveforge_tests::es16();
    GraphSpec sp = spider(2, 2, 3);
    try {
        tverberg_tree_pipeline(ps, sp);
        FAIL("expected SubsetNotFoundError");
    } catch (const SubsetNotFoundError& e) {
        CHECK(e.attempted_size == 16);
    }
}
