#include <doctest.h>

#include "nerveforge/nerve.h"

using namespace nerveforge;

namespace {

// Three long thin triangles arranged around the origin so every pair of hulls
// crosses but no point lies in all three, plus a far-away singleton.
//
//        2 *
//     ....................
//   0 *---------*---------* 1        (schematic, exact coords below)
PointSet pairwise_only_set() {
    return PointSet{2,
                    {
                        {Rat(-10), Rat(1)}, {Rat(10), Rat(1)},    // part 0: horizontal bar
                        {Rat(-6), Rat(-4)}, {Rat(4), Rat(16)},    // part 1: rising bar
                        {Rat(6), Rat(-4)}, {Rat(-4), Rat(16)},    // part 2: falling bar
                        {Rat(100), Rat(100)},                     // part 3: far away
                    }};
}

// Same shape but the three bars all pass through the origin.
PointSet common_point_set() {
    return PointSet{2,
                    {
                        {Rat(-10), Rat(0)}, {Rat(10), Rat(0)},
                        {Rat(-6), Rat(-6)}, {Rat(6), Rat(6)},
                        {Rat(6), Rat(-6)},  {Rat(-6), Rat(6)},
                        {Rat(100), Rat(100)},
                    }};
}

Partition bars_partition(int extra) {
    Partition part;
    part.point_count = 6 + extra;
    part.parts = {{0, 1}, {2, 3}, {4, 5}};
    for (int i = 0; i < extra; ++i) part.parts.push_back({6 + i});
    return part;
}

}  // namespace

TEST_CASE("intersection graph labels parts by index") {
    PointSet ps = pairwise_only_set();
    GraphSpec g = intersection_graph(ps, bars_partition(1));
    CHECK(g.n == 4);
    CHECK(g.edges == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});
    CHECK(g.degrees() == std::vector<int>{2, 2, 2, 0});
}

TEST_CASE("triangle face appears only with a genuine common point") {
    PointSet pw = pairwise_only_set();
    NerveComplex nc_pw = nerve_complex(pw, bars_partition(1));
    CHECK(nc_pw.part_count == 4);
    CHECK(nc_pw.faces_of_size(2).size() == 3);
    CHECK(nc_pw.faces_of_size(3).empty());

    PointSet cp = common_point_set();
    NerveComplex nc_cp = nerve_complex(cp, bars_partition(1));
    CHECK(nc_cp.faces_of_size(2).size() == 3);
    // The three bars share the origin, so {0,1,2} is a face; the singleton
    // part is in no pair.
    CHECK(nc_cp.faces_of_size(3) == std::vector<IndexList>{{0, 1, 2}});
    CHECK(nc_cp.faces_of_size(4).empty());
}

TEST_CASE("singleton faces are always present") {
    PointSet ps = pairwise_only_set();
    NerveComplex nc = nerve_complex(ps, bars_partition(1));
    auto singles = nc.faces_of_size(1);
    CHECK(singles == std::vector<IndexList>{{0}, {1}, {2}, {3}});
}

TEST_CASE("max_face_size truncates the complex but not the graph") {
    PointSet cp = common_point_set();
    NerveComplex capped = nerve_complex(cp, bars_partition(1), 2);
    CHECK(capped.faces_of_size(2).size() == 3);
    CHECK(capped.faces_of_size(3).empty());

    // Size-2 faces coincide with intersection graph edges.
    GraphSpec g = intersection_graph(cp, bars_partition(1));
    std::vector<IndexList> expect;
    for (auto [u, v] : g.edges) expect.push_back({u, v});
    CHECK(capped.faces_of_size(2) == expect);
}

TEST_CASE("nested hulls and shared points still count as intersections") {
    PointSet ps{2,
                {
                    {Rat(0), Rat(0)}, {Rat(8), Rat(0)}, {Rat(0), Rat(8)},  // big triangle
                    {Rat(1), Rat(1)}, {Rat(2), Rat(1)},                    // inside it
                    {Rat(50), Rat(50)},
                }};
    Partition part;
    part.point_count = 6;
    part.parts = {{0, 1, 2}, {3, 4}, {5}};
    GraphSpec g = intersection_graph(ps, part);
    CHECK(g.edges == std::vector<std::pair<int, int>>{{0, 1}});
    NerveComplex nc = nerve_complex(ps, part);
    CHECK(nc.faces_of_size(2) == std::vector<IndexList>{{0, 1}});
}

TEST_CASE("four hulls through one point give the full simplex of faces") {
    PointSet ps{2,
                {
                    {Rat(-4), Rat(0)},  {Rat(4), Rat(0)},
                    {Rat(0), Rat(-4)},  {Rat(0), Rat(4)},
                    {Rat(-3), Rat(-3)}, {Rat(3), Rat(3)},
                    {Rat(3), Rat(-3)},  {Rat(-3), Rat(3)},
                }};
    Partition part;
    part.point_count = 8;
    part.parts = {{0, 1}, {2, 3}, {4, 5}, {6, 7}};
    NerveComplex nc = nerve_complex(ps, part);
    CHECK(nc.faces_of_size(2).size() == 6);
    CHECK(nc.faces_of_size(3).size() == 4);
    CHECK(nc.faces_of_size(4) == std::vector<IndexList>{{0, 1, 2, 3}});
    CHECK(nc.faces.size() == 4 + 6 + 4 + 1);
}
