#include <doctest.h>

#include <algorithm>
#include <set>

#include "nerveforge/cyclebuild.h"
#include "nerveforge/errors.h"
#include "nerveforge/nerve.h"
#include "nerveforge/predicates.h"
#include "nerveforge/randgen.h"

using namespace nerveforge;

namespace {

Rat cross2(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    return a[0] * b[1] - a[1] * b[0];
}

Rat dot2(const std::vector<Rat>& a, const std::vector<Rat>& b) {
    return a[0] * b[0] + a[1] * b[1];
}

std::vector<Rat> dir_from(const Point& apex, const Point& p) {
    return {p[0] - apex[0], p[1] - apex[1]};
}

}  // namespace

TEST_CASE("ham sandwich line meets the strict side bounds") {
    for (uint64_t seed : {3u, 14u, 15u}) {
        PointSet ps = random_points(14, 2, seed, RandomMode::uniform_box);
        IndexList m1, m2;
        for (int i = 0; i < 7; ++i) m1.push_back(i);
        for (int i = 7; i < 14; ++i) m2.push_back(i);
        Hyperplane h = ham_sandwich_line(ps, m1, m2);
        for (const IndexList* m : {&m1, &m2}) {
            SideCounts sc = side_counts(ps, *m, h);
            CHECK(sc.neg <= static_cast<int>(m->size()) / 2);
            CHECK(sc.pos <= static_cast<int>(m->size()) / 2);
            CHECK(sc.neg + sc.pos + sc.on == static_cast<int>(m->size()));
        }
    }
}

TEST_CASE("ham sandwich line avoids a forbidden direction") {
    PointSet ps = random_points(12, 2, 8u, RandomMode::uniform_box);
    IndexList m1, m2;
    for (int i = 0; i < 6; ++i) m1.push_back(i);
    for (int i = 6; i < 12; ++i) m2.push_back(i);
    Hyperplane first = ham_sandwich_line(ps, m1, m2);
    Hyperplane other = ham_sandwich_line(ps, m1, m2, &first);
    CHECK(cross2(first.normal, other.normal) != 0);
    SideCounts sc = side_counts(ps, m1, other);
    CHECK(sc.neg <= 3);
    CHECK(sc.pos <= 3);
}

TEST_CASE("sector subdivision covers the points with fat sectors") {
    for (int n : {4, 5, 6}) {
        int d = 2;
        int N = n * d + n + 4 * d;
        PointSet ps = random_points(N, 2, 1234u, RandomMode::uniform_box);
        auto sectors = sector_subdivision(ps, n, d);
        REQUIRE(sectors.size() == static_cast<std::size_t>(n));

        std::set<Index> seen;
        for (const Sector& s : sectors) {
            CHECK(s.members.size() >= static_cast<std::size_t>(d + 1));
            // Width strictly below pi: the end ray is a proper left turn from
            // the start ray.
            CHECK(cross2(s.start_ray, s.end_ray) > 0);
            for (Index i : s.members) {
                CHECK(seen.insert(i).second);
                auto v = dir_from(s.apex, ps[i]);
                // Inside the half-open wedge (start, end].
                bool after_start = cross2(s.start_ray, v) > 0;
                bool before_end = cross2(v, s.end_ray) > 0 ||
                                  (cross2(v, s.end_ray) == 0 && dot2(v, s.end_ray) > 0);
                CHECK(after_start);
                CHECK(before_end);
            }
        }
        CHECK(seen.size() == static_cast<std::size_t>(N));
    }
}

TEST_CASE("cycle construction realizes the target cycle exactly") {
    for (int d : {2, 3}) {
        for (int n : {4, 5, 6}) {
            int N = n * d + n + 4 * d;
            PointSet ps = random_points(N, d, 600u + static_cast<uint64_t>(10 * n + d),
                                        RandomMode::uniform_box);
            GraphSpec target = GraphSpec::cycle(n);
            PartitionResult res = cycle_partition(target, ps, 1);
            res.partition.validate(ps);
            GraphSpec got = intersection_graph(ps, res.partition);
            CHECK(got.n == target.n);
            CHECK(got.edges == target.edges);
            // The trace records which sector fed each part.
            auto events = res.trace.of_kind<SectorAssignmentEvent>();
            CHECK(events.size() == static_cast<std::size_t>(n));
        }
    }
}

TEST_CASE("relaxed mode runs on the bare minimum point count") {
    int n = 4, d = 2;
    PointSet ps = random_points(n * (d + 1) + 1, 2, 1u, RandomMode::uniform_box);
    GraphSpec target = GraphSpec::cycle(4);
    PartitionResult res = cycle_partition(target, ps, 2, true);
    res.partition.validate(ps);
    CHECK(intersection_graph(ps, res.partition).edges == target.edges);
    // The same set is below the unconditional bound, so strict mode refuses.
    CHECK_THROWS_AS(cycle_partition(target, ps, 2, false), TooFewPointsError);
}

TEST_CASE("cycle preconditions") {
    PointSet ps = random_points(20, 2, 9u, RandomMode::uniform_box);
    CHECK_THROWS_AS(cycle_partition(GraphSpec::path(4), ps), PreconditionError);
    PointSet few = random_points(7, 2, 9u, RandomMode::uniform_box);
    CHECK_THROWS_AS(cycle_partition(GraphSpec::cycle(4), few), TooFewPointsError);
    CHECK_THROWS_AS(sector_subdivision(few, 3, 2), PreconditionError);
}

TEST_CASE("generic projection is the identity in the plane") {
    PointSet ps = random_points(9, 2, 5u, RandomMode::uniform_box);
    auto [flat, proj] = project_generic(ps, 77u);
    CHECK(flat.dim == 2);
    REQUIRE(flat.size() == ps.size());
    for (int i = 0; i < ps.size(); ++i) CHECK(points_equal(flat[i], ps[i]));
}

TEST_CASE("generic projection of 3d points lands in general position") {
    PointSet ps = random_points(12, 3, 6u, RandomMode::uniform_box);
    auto [flat, proj] = project_generic(ps, 501u);
    CHECK(flat.dim == 2);
    CHECK(in_general_position(flat));
    // The projection really is the claimed linear map.
    PointSet again = proj.apply(ps);
    for (int i = 0; i < ps.size(); ++i) CHECK(points_equal(again[i], flat[i]));
}

TEST_CASE("projection failures are honest") {
    PointSet flatline{2, {{Rat(0), Rat(0)}, {Rat(1), Rat(1)}, {Rat(2), Rat(2)}}};
    CHECK_THROWS_AS(project_generic(flatline, 1u), NotGeneralPositionError);

    PointSet spine{3, {}};
    for (int t = 0; t < 5; ++t) spine.points.push_back({Rat(t), Rat(2 * t), Rat(3 * t)});
    CHECK_THROWS_AS(project_generic(spine, 1u), RetriesExhaustedError);
}
