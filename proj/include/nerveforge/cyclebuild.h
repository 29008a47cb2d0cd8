#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "nerveforge/convex.h"
#include "nerveforge/graph.h"
#include "nerveforge/partition.h"

namespace nerveforge {

// Linear map R^d -> R^2, x |-> (u.x, v.x). The identity embedding when d = 2.
struct PlaneProjection {
    std::vector<Rat> u;
    std::vector<Rat> v;

    PointSet apply(const PointSet& ps) const;
};

// Projects onto a plane spanned by two directions drawn from a seeded stream,
// retrying until the images are pairwise distinct and no three are collinear.
// d = 2 returns the identity and only checks. Throws NotGeneralPositionError
// (d = 2, nothing to retry) or RetriesExhaustedError (d >= 3, every tried
// direction pair degenerates, which means the input itself is degenerate).
std::pair<PointSet, PlaneProjection> project_generic(const PointSet& ps, uint64_t seed,
                                                     int max_tries = 64);

// Line through two input points with at most floor(|m1|/2) of m1 and at most
// floor(|m2|/2) of m2 strictly on each side. Exact enumeration over point
// pairs in index order; the first qualifying line wins. `not_parallel_to`
// additionally skips lines parallel to the given one.
Hyperplane ham_sandwich_line(const PointSet& flat, const IndexList& m1, const IndexList& m2,
                             const Hyperplane* not_parallel_to = nullptr);

// Angular wedge at the apex: members' directions lie in the half-open wedge
// (start_ray, end_ray], going counterclockwise, and the width is below pi.
struct Sector {
    Point apex;
    std::vector<Rat> start_ray;
    std::vector<Rat> end_ray;
    IndexList members;  // sorted by angle around the apex, ties by index
    int quadrant = 0;
};

// Splits the plane at the crossing of a median line and a ham-sandwich line
// and cuts each of the four quadrants into angular sectors of at least d+1
// points each, then merges neighbors within a quadrant down to exactly n
// sectors, returned in counterclockwise order. Points on the ham-sandwich
// line join the sector ending at their ray. `relaxed` lowers the size
// precondition to n(d+1)+1 points; success is then input-dependent.
std::vector<Sector> sector_subdivision(const PointSet& flat, int n, int d, bool relaxed = false);

// Partition of |ps| >= nd+n+4d points in R^d realizing the cycle `target`:
// consecutive sectors are chained by Radon splits on d+2 original points, a
// carried point linking each part to the next, and the last chain step wraps
// into the first part. `relaxed` accepts n(d+1)+1 points and skips the slack
// that makes the sector counts unconditional. The hull intersection graph is
// verified to equal the target before returning.
PartitionResult cycle_partition(const GraphSpec& target, const PointSet& ps, uint64_t seed = 0,
                                bool relaxed = false);

}  // namespace nerveforge
