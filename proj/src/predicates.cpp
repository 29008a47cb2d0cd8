#include "nerveforge/predicates.h"

#include <algorithm>

#include "nerveforge/errors.h"
#include "nerveforge/linalg.h"

namespace nerveforge {

namespace {
std::size_t uz(int i) { return static_cast<std::size_t>(i); }
}  // namespace

std::size_t binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::size_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * uz(n - k + i) / uz(i);
    return r;
}

int orientation(const PointSet& ps, const IndexList& tuple) {
    int d = ps.dim;
    if (static_cast<int>(tuple.size()) != d + 1)
        throw DimensionError("orientation needs exactly dim+1 points");
    Mat m(uz(d + 1), Row(uz(d + 1)));
    for (int r = 0; r <= d; ++r) {
        m[uz(r)][0] = 1;
        for (int c = 0; c < d; ++c) m[uz(r)][uz(c + 1)] = ps[tuple[uz(r)]][uz(c)];
    }
    return det_sign(std::move(m));
}

std::size_t Chirotope::rank(const IndexList& tuple) const {
    // Standard combinadic rank in lex order.
    int k = dim + 1;
    std::size_t r = 0;
    int prev = -1;
    for (int i = 0; i < k; ++i) {
        for (int v = prev + 1; v < tuple[uz(i)]; ++v) r += binomial(n - 1 - v, k - 1 - i);
        prev = tuple[uz(i)];
    }
    return r;
}

int8_t Chirotope::sign(const IndexList& t) const { return signs[rank(t)]; }

int Chirotope::sign_any_order(IndexList tuple) const {
    int parity = 1;
    for (std::size_t i = 1; i < tuple.size(); ++i)
        for (std::size_t j = i; j > 0 && tuple[j] < tuple[j - 1]; --j) {
            std::swap(tuple[j], tuple[j - 1]);
            parity = -parity;
        }
    return parity * sign(tuple);
}

bool Chirotope::all_positive() const {
    return std::all_of(signs.begin(), signs.end(), [](int8_t s) { return s > 0; });
}

bool Chirotope::has_zero() const {
    return std::any_of(signs.begin(), signs.end(), [](int8_t s) { return s == 0; });
}

namespace {

IndexList unrank_tuple(std::size_t rank, int n, int k) {
    IndexList t(uz(k));
    int v = 0;
    for (int i = 0; i < k; ++i) {
        for (;; ++v) {
            std::size_t block = binomial(n - 1 - v, k - 1 - i);
            if (rank < block) break;
            rank -= block;
        }
        t[uz(i)] = v++;
    }
    return t;
}

}  // namespace

Chirotope chirotope_serial(const PointSet& ps) {
    ps.validate();
    Chirotope chi;
    chi.n = ps.size();
    chi.dim = ps.dim;
    chi.signs.reserve(binomial(chi.n, chi.dim + 1));
    for_each_tuple(chi.n, chi.dim + 1, [&](const IndexList& t) {
        chi.signs.push_back(static_cast<int8_t>(orientation(ps, t)));
    });
    return chi;
}

Chirotope chirotope(const PointSet& ps) {
    ps.validate();
    Chirotope chi;
    chi.n = ps.size();
    chi.dim = ps.dim;
    std::size_t total = binomial(chi.n, chi.dim + 1);
    chi.signs.assign(total, 0);
#pragma omp parallel for schedule(static)
    for (long long r = 0; r < static_cast<long long>(total); ++r) {
        IndexList t = unrank_tuple(static_cast<std::size_t>(r), chi.n, chi.dim + 1);
        chi.signs[static_cast<std::size_t>(r)] = static_cast<int8_t>(orientation(ps, t));
    }
    return chi;
}

Chirotope induced_chirotope(const Chirotope& chi, const PointSet& ps, const IndexList& subset) {
    (void)ps;
    Chirotope out;
    out.n = static_cast<int>(subset.size());
    out.dim = chi.dim;
    out.signs.reserve(binomial(out.n, out.dim + 1));
    for_each_tuple(out.n, out.dim + 1, [&](const IndexList& t) {
        IndexList mapped(t.size());
        for (std::size_t i = 0; i < t.size(); ++i) mapped[i] = subset[uz(t[i])];
        out.signs.push_back(static_cast<int8_t>(chi.sign_any_order(mapped)));
    });
    return out;
}

bool in_general_position(const PointSet& ps) {
    if (ps.size() <= ps.dim) {
        // Too few points for a full tuple; require pairwise distinctness.
        for (int i = 0; i < ps.size(); ++i)
            for (int j = i + 1; j < ps.size(); ++j)
                if (points_equal(ps[i], ps[j])) return false;
        return true;
    }
    return !chirotope(ps).has_zero();
}

}  // namespace nerveforge
