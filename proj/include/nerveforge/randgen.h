#pragma once

#include <cstdint>
#include <string>

#include "nerveforge/geometry.h"

namespace nerveforge {

// uniform_box: integer coordinates, degenerate tuples rejected point by point.
// convex_position: rational circle points, strictly convex, planar only.
// moment_curve: (t, t^2, ..., t^d) at distinct random integers t, ascending,
// so the orientation signs are uniformly positive in index order.
enum class RandomMode { uniform_box, convex_position, moment_curve };

RandomMode random_mode_from_name(const std::string& name);  // UnknownConfigError
std::string random_mode_name(RandomMode mode);

PointSet random_points(int n, int d, uint64_t seed, RandomMode mode);

// Orientation-preserving integer affine map x -> A x + b with det A = +1.
struct AffineMap {
    std::vector<std::vector<Rat>> linear;
    std::vector<Rat> shift;

    Point apply(const Point& p) const;
    PointSet apply(const PointSet& ps) const;
};

// Product of seeded integer shear matrices plus an integer translation.
AffineMap random_unimodular_map(int d, uint64_t seed);

}  // namespace nerveforge
