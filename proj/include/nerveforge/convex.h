#pragma once

#include <optional>

#include "nerveforge/geometry.h"

namespace nerveforge {

// Radon split of exactly d+2 points: conv(part_a) meets conv(part_b) at
// `witness`. Zero-coefficient points land in part_a.
struct RadonPair {
    IndexList part_a;
    IndexList part_b;
    Point witness;
};

// Indices are into ps.
RadonPair radon_partition(const PointSet& ps);
// Same split computed on a (d+2)-subset, reported in original indices.
RadonPair radon_split(const PointSet& ps, const IndexList& subset);

// Outcome of the exact hull intersection test. Feasible: `witness` is a
// common point. Infeasible: `separator` strictly separates (A negative side,
// B positive side). Both certificates are re-verified before return.
struct HullCertificate {
    bool intersects = false;
    std::optional<Point> witness;
    std::optional<Hyperplane> separator;
};

HullCertificate hulls_intersect(const PointSet& ps, const IndexList& a, const IndexList& b);

// A point common to conv(group) for every group, if one exists.
std::optional<Point> common_point(const PointSet& ps, const std::vector<IndexList>& groups);

bool point_in_hull(const PointSet& ps, const Point& p, const IndexList& subset);

struct SideCounts {
    int neg = 0;
    int pos = 0;
    int on = 0;
};

SideCounts separating_line_side_counts(const PointSet& ps, const Hyperplane& h);
SideCounts side_counts(const PointSet& ps, const IndexList& subset, const Hyperplane& h);

}  // namespace nerveforge
