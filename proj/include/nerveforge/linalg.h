#pragma once

#include <optional>
#include <vector>

#include "nerveforge/rational.h"

namespace nerveforge {

using Row = std::vector<Rat>;
using Mat = std::vector<Row>;

// Sign of det(m) for square m: -1, 0, +1. Fraction-free not needed; plain
// rational elimination is exact.
int det_sign(Mat m);

// One nonzero kernel vector of m (rows x cols, rows < cols or singular),
// or nullopt when the kernel is trivial. Deterministic: the free column with
// the smallest index gets coefficient 1.
std::optional<Row> nullspace_vector(Mat m);

// Exact solve of a consistent linear system m x = rhs (least structure: free
// variables set to 0). Returns nullopt when inconsistent.
std::optional<Row> solve_linear(Mat m, Row rhs);

// Feasibility of {A x = b, x >= 0} by phase-1 simplex with Bland's rule.
// Exactly one of `solution` / `farkas` is set. The Farkas row y satisfies
// y.A <= 0 componentwise and y.b > 0, certifying infeasibility; it is
// verified before return.
struct LpFeasibility {
    std::optional<Row> solution;
    std::optional<Row> farkas;
    bool feasible() const { return solution.has_value(); }
};

LpFeasibility lp_feasible(const Mat& a, const Row& b);

}  // namespace nerveforge
