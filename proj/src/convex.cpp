#include "nerveforge/convex.h"

#include <algorithm>

#include "nerveforge/errors.h"
#include "nerveforge/linalg.h"

namespace nerveforge {

namespace {

std::size_t uz(int i) { return static_cast<std::size_t>(i); }

Point combine(const PointSet& ps, const IndexList& idx, const Row& weights, const Rat& total) {
    Point p(uz(ps.dim), Rat(0));
    for (std::size_t i = 0; i < idx.size(); ++i)
        for (int c = 0; c < ps.dim; ++c) p[uz(c)] += weights[i] * ps[idx[i]][uz(c)];
    for (int c = 0; c < ps.dim; ++c) p[uz(c)] /= total;
    return p;
}

}  // namespace

RadonPair radon_split(const PointSet& ps, const IndexList& subset) {
    ps.validate();
    int d = ps.dim;
    if (static_cast<int>(subset.size()) != d + 2)
        throw DimensionError("radon split needs exactly dim+2 points");

    // Kernel of the homogenized point matrix = affine dependence coefficients.
    Mat m(uz(d + 1), Row(uz(d + 2)));
    for (int c = 0; c < d + 2; ++c) {
        m[0][uz(c)] = 1;
        for (int r = 0; r < d; ++r) m[uz(r + 1)][uz(c)] = ps[subset[uz(c)]][uz(r)];
    }
    auto kernel = nullspace_vector(std::move(m));
    if (!kernel) throw DegeneracyError("no affine dependence among dim+2 points");

    Row coeff = *kernel;
    int lead = 0;
    while (lead < d + 2 && coeff[uz(lead)] == 0) ++lead;
    if (lead == d + 2) throw DegeneracyError("trivial affine dependence");
    if (sgn(coeff[uz(lead)]) < 0)
        for (auto& c : coeff) c = -c;

    RadonPair out;
    Row wa;
    Rat ta(0), tb(0);
    for (int i = 0; i < d + 2; ++i) {
        if (sgn(coeff[uz(i)]) >= 0) {
            out.part_a.push_back(subset[uz(i)]);
            if (sgn(coeff[uz(i)]) > 0) {
                wa.push_back(coeff[uz(i)]);
                ta += coeff[uz(i)];
            } else {
                wa.push_back(Rat(0));
            }
        } else {
            out.part_b.push_back(subset[uz(i)]);
            tb -= coeff[uz(i)];
        }
    }
    if (out.part_b.empty() || ta == 0)
        throw DegeneracyError("affine dependence with one sign only");
    out.witness = combine(ps, out.part_a, wa, ta);

    // The same point must arise from the negative side; check it.
    Row wb;
    for (int i = 0; i < d + 2; ++i)
        if (sgn(coeff[uz(i)]) < 0) wb.push_back(-coeff[uz(i)]);
    Point check = combine(ps, out.part_b, wb, tb);
    if (!points_equal(out.witness, check))
        throw Error("radon witness mismatch between the two sides");
    return out;
}

RadonPair radon_partition(const PointSet& ps) {
    IndexList all(uz(ps.size()));
    for (int i = 0; i < ps.size(); ++i) all[uz(i)] = i;
    return radon_split(ps, all);
}

HullCertificate hulls_intersect(const PointSet& ps, const IndexList& a, const IndexList& b) {
    ps.validate();
    if (a.empty() || b.empty()) throw PreconditionError("hulls_intersect needs nonempty parts");
    int d = ps.dim;
    int na = static_cast<int>(a.size()), nb = static_cast<int>(b.size());

    // Variables: lambda over a, mu over b. Rows: two convexity rows, then
    // coordinate balance sum(lambda a) - sum(mu b) = 0.
    Mat sys(uz(2 + d), Row(uz(na + nb), Rat(0)));
    Row rhs(uz(2 + d), Rat(0));
    rhs[0] = 1;
    rhs[1] = 1;
    for (int i = 0; i < na; ++i) sys[0][uz(i)] = 1;
    for (int j = 0; j < nb; ++j) sys[1][uz(na + j)] = 1;
    for (int c = 0; c < d; ++c) {
        for (int i = 0; i < na; ++i) sys[uz(2 + c)][uz(i)] = ps[a[uz(i)]][uz(c)];
        for (int j = 0; j < nb; ++j) sys[uz(2 + c)][uz(na + j)] = -ps[b[uz(j)]][uz(c)];
    }

    auto lp = lp_feasible(sys, rhs);
    HullCertificate cert;
    if (lp.feasible()) {
        cert.intersects = true;
        Row lambda(lp.solution->begin(), lp.solution->begin() + na);
        Row mu(lp.solution->begin() + na, lp.solution->end());
        Point pa = combine(ps, a, lambda, Rat(1));
        Point pb = combine(ps, b, mu, Rat(1));
        if (!points_equal(pa, pb)) throw Error("hull witness disagrees between parts");
        cert.witness = std::move(pa);
        return cert;
    }

    // Farkas row (alpha, beta, w): w.x <= -alpha on A, w.x >= beta on B,
    // alpha + beta > 0, so the midplane separates strictly.
    const Row& y = *lp.farkas;
    Hyperplane h;
    h.normal.assign(y.begin() + 2, y.end());
    h.offset = (y[1] - y[0]) / 2;
    bool zero = std::all_of(h.normal.begin(), h.normal.end(), [](const Rat& v) { return v == 0; });
    if (zero) throw Error("separator with zero normal");
    for (Index i : a)
        if (h.side(ps[i]) >= 0) throw Error("separator fails strictness on part A");
    for (Index j : b)
        if (h.side(ps[j]) <= 0) throw Error("separator fails strictness on part B");
    cert.separator = std::move(h);
    return cert;
}

std::optional<Point> common_point(const PointSet& ps, const std::vector<IndexList>& groups) {
    ps.validate();
    int k = static_cast<int>(groups.size());
    if (k == 0) throw PreconditionError("common_point needs at least one group");
    for (const auto& g : groups)
        if (g.empty()) throw PreconditionError("common_point groups must be nonempty");
    int d = ps.dim;

    std::vector<int> offset(uz(k), 0);
    int vars = 0;
    for (int g = 0; g < k; ++g) {
        offset[uz(g)] = vars;
        vars += static_cast<int>(groups[uz(g)].size());
    }
    int rows = k + d * (k - 1);
    Mat sys(uz(rows), Row(uz(vars), Rat(0)));
    Row rhs(uz(rows), Rat(0));
    for (int g = 0; g < k; ++g) {
        rhs[uz(g)] = 1;
        for (std::size_t i = 0; i < groups[uz(g)].size(); ++i)
            sys[uz(g)][uz(offset[uz(g)] + static_cast<int>(i))] = 1;
    }
    for (int g = 1; g < k; ++g)
        for (int c = 0; c < d; ++c) {
            int r = k + (g - 1) * d + c;
            for (std::size_t i = 0; i < groups[0].size(); ++i)
                sys[uz(r)][uz(static_cast<int>(i))] = ps[groups[0][i]][uz(c)];
            for (std::size_t i = 0; i < groups[uz(g)].size(); ++i)
                sys[uz(r)][uz(offset[uz(g)] + static_cast<int>(i))] = -ps[groups[uz(g)][i]][uz(c)];
        }

    auto lp = lp_feasible(sys, rhs);
    if (!lp.feasible()) return std::nullopt;
    Row first(lp.solution->begin(), lp.solution->begin() + static_cast<int>(groups[0].size()));
    Point w = combine(ps, groups[0], first, Rat(1));
    for (int g = 1; g < k; ++g) {
        Row wg(lp.solution->begin() + offset[uz(g)],
               lp.solution->begin() + offset[uz(g)] + static_cast<int>(groups[uz(g)].size()));
        if (!points_equal(w, combine(ps, groups[uz(g)], wg, Rat(1))))
            throw Error("common point disagrees across groups");
    }
    return w;
}

bool point_in_hull(const PointSet& ps, const Point& p, const IndexList& subset) {
    if (subset.empty()) return false;
    int d = ps.dim;
    int n = static_cast<int>(subset.size());
    Mat sys(uz(1 + d), Row(uz(n), Rat(0)));
    Row rhs(uz(1 + d), Rat(0));
    rhs[0] = 1;
    for (int i = 0; i < n; ++i) sys[0][uz(i)] = 1;
    for (int c = 0; c < d; ++c) {
        rhs[uz(1 + c)] = p[uz(c)];
        for (int i = 0; i < n; ++i) sys[uz(1 + c)][uz(i)] = ps[subset[uz(i)]][uz(c)];
    }
    return lp_feasible(sys, rhs).feasible();
}

SideCounts side_counts(const PointSet& ps, const IndexList& subset, const Hyperplane& h) {
    SideCounts sc;
    for (Index i : subset) {
        int s = h.side(ps[i]);
        if (s < 0)
            ++sc.neg;
        else if (s > 0)
            ++sc.pos;
        else
            ++sc.on;
    }
    return sc;
}

SideCounts separating_line_side_counts(const PointSet& ps, const Hyperplane& h) {
    IndexList all(uz(ps.size()));
    for (int i = 0; i < ps.size(); ++i) all[uz(i)] = i;
    return side_counts(ps, all, h);
}

}  // namespace nerveforge
