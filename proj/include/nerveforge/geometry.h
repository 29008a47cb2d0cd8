#pragma once

#include <cstddef>
#include <vector>

#include "nerveforge/rational.h"

namespace nerveforge {

using Point = std::vector<Rat>;
using Index = int;
using IndexList = std::vector<Index>;

// Finite labeled point set in R^dim. Points are addressed by 0-based index
// everywhere (files, traces, CLI output).
struct PointSet {
    int dim = 0;
    std::vector<Point> points;

    int size() const { return static_cast<int>(points.size()); }
    const Point& operator[](int i) const { return points[static_cast<std::size_t>(i)]; }
    Point& operator[](int i) { return points[static_cast<std::size_t>(i)]; }

    // Throws DimensionError unless every point has exactly dim coordinates.
    void validate() const;
    PointSet subset(const IndexList& idx) const;
};

// Oriented hyperplane {x : normal . x = offset}. side() is the sign of
// normal . x - offset; +1 is the side the normal points into.
struct Hyperplane {
    std::vector<Rat> normal;
    Rat offset;

    int side(const Point& p) const;
    Rat eval(const Point& p) const;
};

bool points_equal(const Point& a, const Point& b);

// Line through two distinct 2D points; +1 side is the left of a->b.
Hyperplane line_through(const Point& a, const Point& b);

// Hyperplane through d affinely independent points in R^d (d >= 2).
// Throws DegeneracyError when the points are affinely dependent.
Hyperplane hyperplane_through(const PointSet& ps, const IndexList& idx);

// sign of the z-component of (b-a) x (c-a); +1 = left turn.
int orient2d(const Point& a, const Point& b, const Point& c);

// Indices of hull vertices of a planar set, counterclockwise, starting at the
// lexicographically smallest point. Collinear boundary points are not vertices.
IndexList hull_ccw_2d(const PointSet& ps, const IndexList& subset);
IndexList hull_ccw_2d(const PointSet& ps);

// Every point of `subset` a hull vertex (strictly convex position).
bool convex_position_2d(const PointSet& ps, const IndexList& subset);
bool convex_position_2d(const PointSet& ps);

// Closed-segment intersection test, exact.
bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d);

bool point_on_segment(const Point& p, const Point& a, const Point& b);

}  // namespace nerveforge
