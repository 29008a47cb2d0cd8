#pragma once

#include <cstdint>
#include <vector>

#include "nerveforge/geometry.h"

namespace nerveforge {

// Orientation of d+1 points in R^d: sign of the homogenized determinant.
// Zero means affine degeneracy.
int orientation(const PointSet& ps, const IndexList& tuple);

// All C(n, d+1) orientation signs in lexicographic order of increasing
// index tuples.
struct Chirotope {
    int n = 0;
    int dim = 0;
    std::vector<int8_t> signs;

    // Rank of an increasing (d+1)-tuple in lex order.
    std::size_t rank(const IndexList& tuple) const;
    int8_t sign(const IndexList& increasing_tuple) const;
    // Sign for an arbitrary-order tuple of distinct indices (parity-adjusted).
    int sign_any_order(IndexList tuple) const;
    bool all_positive() const;
    bool has_zero() const;

    bool operator==(const Chirotope& o) const = default;
};

Chirotope chirotope(const PointSet& ps);         // OpenMP over tuple ranks
Chirotope chirotope_serial(const PointSet& ps);  // reference implementation

// Chirotope restricted to a subset, relabeled 0..k-1 in the order given.
Chirotope induced_chirotope(const Chirotope& chi, const PointSet& ps, const IndexList& subset);

bool in_general_position(const PointSet& ps);

// Enumerate increasing (k)-tuples over [0, n); f(tuple) called in lex order.
template <typename F>
void for_each_tuple(int n, int k, F&& f) {
    if (k > n || k <= 0) return;
    IndexList t(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) t[static_cast<std::size_t>(i)] = i;
    for (;;) {
        f(const_cast<const IndexList&>(t));
        int i = k - 1;
        while (i >= 0 && t[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++t[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            t[static_cast<std::size_t>(j)] = t[static_cast<std::size_t>(j - 1)] + 1;
    }
}

std::size_t binomial(int n, int k);

}  // namespace nerveforge
