#pragma once

#include "nerveforge/geometry.h"

namespace nerveforge_tests {

// Sixteen planar points in general position with no six in convex position.
// Five stacked groups (sizes 1, 4, 6, 4, 1); within each group no 4-point cup
// and no cap big enough to chain, and consecutive inter-group slopes are
// positive and drop fast enough that any convex chain crosses at most one
// group transition. Coordinates are exact integers around 2.8e9, so every
// orientation test on them must run through Rat, never int64.
inline nerveforge::PointSet es16() {
    static const long c[16][2] = {
        {0, 0},
        {2356992, 2111864832},
        {2553408, 2112130944},
        {2618880, 2112156288},
        {2651616, 2112159456},
        {4713984, 2639831040},
        {4779456, 2639852864},
        {4812192, 2639855592},
        {4910400, 2640101112},
        {4959504, 2640104181},
        {5008608, 2640125664},
        {7070976, 2771822592},
        {7144632, 2771825940},
        {7218288, 2771849376},
        {7365600, 2772117216},
        {9427968, 2804820480},
    };
    nerveforge::PointSet ps;
    ps.dim = 2;
    for (auto& p : c) ps.points.push_back({nerveforge::Rat(p[0]), nerveforge::Rat(p[1])});
    return ps;
}

}  // namespace nerveforge_tests
