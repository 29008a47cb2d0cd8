#include <doctest.h>

#include <algorithm>
#include <random>

#include "es16_fixture.h"
#include "nerveforge/errors.h"
#include "nerveforge/predicates.h"
#include "nerveforge/randgen.h"
#include "nerveforge/subsetfind.h"

using namespace nerveforge;
using nerveforge_tests::es16;

namespace {

Rat cross(const Point& a, const Point& b, const Point& c) {
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
}

// Convex position oracle: no point of the quadruple inside the triangle of
// the other three, checked for every quadruple, all in exact arithmetic.
bool convex_oracle(const PointSet& ps, const IndexList& subset) {
    auto inside = [&](Index p, Index a, Index b, Index c) {
        Rat s1 = cross(ps[a], ps[b], ps[p]);
        Rat s2 = cross(ps[b], ps[c], ps[p]);
        Rat s3 = cross(ps[c], ps[a], ps[p]);
        if (s1 == 0 || s2 == 0 || s3 == 0) return true;  // degenerate counts against
        return (s1 > 0) == (s2 > 0) && (s2 > 0) == (s3 > 0);
    };
    int m = static_cast<int>(subset.size());
    if (m < 4) return true;
    bool ok = true;
    for_each_tuple(m, 4, [&](const IndexList& t) {
        if (!ok) return;
        Index a = subset[t[0]], b = subset[t[1]], c = subset[t[2]], d = subset[t[3]];
        if (inside(a, b, c, d) || inside(b, a, c, d) || inside(c, a, b, d) || inside(d, a, b, c))
            ok = false;
    });
    return ok;
}

}  // namespace

TEST_CASE("the 16-point witness set blocks convex hexagons exhaustively") {
    PointSet ps = es16();
    REQUIRE(ps.size() == 16);
    CHECK(in_general_position(ps));
    // All 8008 six-point subsets fail convex position, by the oracle.
    uint64_t checked = 0;
    for_each_tuple(16, 6, [&](const IndexList& t) {
        IndexList sub(t.begin(), t.end());
        CHECK(!convex_oracle(ps, sub));
        ++checked;
    });
    CHECK(checked == 8008);
}

TEST_CASE("convex subset search respects the hexagon blocker") {
    PointSet ps = es16();
    CHECK_THROWS_AS(find_convex_subset_2d(ps, 6), NotFoundError);
    IndexList five = find_convex_subset_2d(ps, 5);
    CHECK(five.size() == 5);
    CHECK(std::is_sorted(five.begin(), five.end()));
    CHECK(convex_oracle(ps, five));
    CHECK(convex_position_2d(ps, five));
}

TEST_CASE("convex subset search finds polygons in convex-position input") {
    PointSet ps = random_points(9, 2, 17u, RandomMode::convex_position);
    IndexList all = find_convex_subset_2d(ps, 9);
    IndexList want(9);
    for (int i = 0; i < 9; ++i) want[static_cast<std::size_t>(i)] = i;
    CHECK(all == want);
    IndexList seven = find_convex_subset_2d(ps, 7);
    CHECK(seven.size() == 7);
    CHECK(convex_oracle(ps, seven));
}

TEST_CASE("cyclic subpolytope search skips a poisoned prefix") {
    for (int d : {2, 3}) {
        int m = d + 4;
        PointSet curve = random_points(10, d, 31u + static_cast<uint64_t>(d), RandomMode::moment_curve);
        // Rotate the largest-parameter point to the front. The lex-first
        // subset now starts with it and fails, so the scan must move past
        // index 0 and return the untouched ascending run.
        PointSet rotated;
        rotated.dim = d;
        rotated.points.push_back(curve[9]);
        for (int i = 0; i < 9; ++i) rotated.points.push_back(curve[i]);

        IndexList got = find_cyclic_subpolytope(rotated, m);
        IndexList want(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) want[static_cast<std::size_t>(i)] = i + 1;
        CHECK(got == want);
        // Contract: positive orientation for every increasing tuple along the
        // returned order.
        CHECK(chirotope(rotated.subset(got)).all_positive());
    }
}

TEST_CASE("reversal fixup when the lex-first subset is uniformly negative") {
    // Descending parameters on the plane flip every orientation; d = 2 has
    // d mod 4 = 2, so reversing the list must repair the signs.
    PointSet ps;
    ps.dim = 2;
    for (int t : {9, 6, 3, 1, -2, -5, -8}) ps.points.push_back({Rat(t), Rat(t) * Rat(t)});
    IndexList got = find_cyclic_subpolytope(ps, 5);
    REQUIRE(got.size() == 5);
    CHECK(chirotope(ps.subset(got)).all_positive());
    // The winning list is the reversed lex-first subset, so it descends.
    CHECK(!std::is_sorted(got.begin(), got.end()));
}

TEST_CASE("cyclic subpolytope misses are honest") {
    PointSet ps = es16();
    CHECK_THROWS_AS(find_cyclic_subpolytope(ps, 6), NotFoundError);
}

TEST_CASE("budgets bound the scan work") {
    PointSet ps = es16();
    CHECK_THROWS_AS(find_convex_subset_2d(ps, 6, 10), BudgetExceededError);
    CHECK_THROWS_AS(find_cyclic_subpolytope(ps, 6, 10), BudgetExceededError);
}
