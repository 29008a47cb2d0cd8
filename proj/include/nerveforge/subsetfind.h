#pragma once

#include <cstdint>

#include "nerveforge/geometry.h"
#include "nerveforge/predicates.h"

namespace nerveforge {

// Deterministic witness of k planar points in convex position, as sorted
// indices. Longest-convex-chain scan rooted at each candidate bottom vertex
// in lex order; throws NotFoundError when no such subset exists,
// BudgetExceededError when the scan would exceed the transition budget.
IndexList find_convex_subset_2d(const PointSet& ps, int k, uint64_t budget = 200'000'000);

// Ordered index list s_1..s_m whose orientation signs are uniformly positive
// when the points are taken in that order, matching the sign pattern of
// points on the moment curve with increasing parameter. Scans size-m subsets
// in lexicographic index order, pruning prefixes as soon as a sign disagrees;
// an all-negative subset is returned reversed when reversal flips every sign,
// which happens exactly when d mod 4 is 1 or 2.
IndexList find_cyclic_subpolytope(const PointSet& ps, int m, uint64_t budget = 200'000'000);

}  // namespace nerveforge
