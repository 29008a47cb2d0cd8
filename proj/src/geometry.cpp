#include "nerveforge/geometry.h"

#include <algorithm>

#include "nerveforge/errors.h"
#include "nerveforge/linalg.h"

namespace nerveforge {

void PointSet::validate() const {
    if (dim < 1) throw DimensionError("point set dimension must be >= 1");
    for (const auto& p : points)
        if (static_cast<int>(p.size()) != dim)
            throw DimensionError("point arity does not match dim");
}

PointSet PointSet::subset(const IndexList& idx) const {
    PointSet out;
    out.dim = dim;
    out.points.reserve(idx.size());
    for (Index i : idx) out.points.push_back(points[static_cast<std::size_t>(i)]);
    return out;
}

Rat Hyperplane::eval(const Point& p) const {
    Rat acc = -offset;
    for (std::size_t i = 0; i < normal.size(); ++i) acc += normal[i] * p[i];
    return acc;
}

int Hyperplane::side(const Point& p) const { return sgn(eval(p)); }

bool points_equal(const Point& a, const Point& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return false;
    return true;
}

Hyperplane line_through(const Point& a, const Point& b) {
    if (points_equal(a, b)) throw DegeneracyError("line through coincident points");
    Hyperplane h;
    h.normal = {a[1] - b[1], b[0] - a[0]};
    h.offset = h.normal[0] * a[0] + h.normal[1] * a[1];
    return h;
}

Hyperplane hyperplane_through(const PointSet& ps, const IndexList& idx) {
    int d = ps.dim;
    if (static_cast<int>(idx.size()) != d)
        throw DimensionError("hyperplane needs exactly dim points");
    if (d == 2) return line_through(ps[idx[0]], ps[idx[1]]);
    // Normal spans the nullspace of the (d-1) x d difference matrix.
    Mat diffs(static_cast<std::size_t>(d - 1), Row(static_cast<std::size_t>(d)));
    for (int r = 1; r < d; ++r)
        for (int c = 0; c < d; ++c)
            diffs[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] =
                ps[idx[static_cast<std::size_t>(r)]][static_cast<std::size_t>(c)] -
                ps[idx[0]][static_cast<std::size_t>(c)];
    auto kernel = nullspace_vector(diffs);
    if (!kernel) throw DegeneracyError("affinely dependent points define no hyperplane");
    Hyperplane h;
    h.normal = *kernel;
    h.offset = 0;
    for (int c = 0; c < d; ++c)
        h.offset += h.normal[static_cast<std::size_t>(c)] * ps[idx[0]][static_cast<std::size_t>(c)];
    return h;
}

int orient2d(const Point& a, const Point& b, const Point& c) {
    Rat det = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
    return sgn(det);
}

IndexList hull_ccw_2d(const PointSet& ps, const IndexList& subset) {
    if (ps.dim != 2) throw DimensionError("hull_ccw_2d requires dim 2");
    IndexList order = subset;
    std::sort(order.begin(), order.end(), [&](Index x, Index y) {
        if (ps[x][0] != ps[y][0]) return ps[x][0] < ps[y][0];
        if (ps[x][1] != ps[y][1]) return ps[x][1] < ps[y][1];
        return x < y;
    });
    order.erase(std::unique(order.begin(), order.end(),
                            [&](Index x, Index y) { return points_equal(ps[x], ps[y]); }),
                order.end());
    int m = static_cast<int>(order.size());
    if (m <= 2) return order;

    // Andrew monotone chain, strict turns only.
    IndexList hull(static_cast<std::size_t>(2 * m));
    int k = 0;
    for (int i = 0; i < m; ++i) {
        while (k >= 2 && orient2d(ps[hull[static_cast<std::size_t>(k - 2)]],
                                  ps[hull[static_cast<std::size_t>(k - 1)]],
                                  ps[order[static_cast<std::size_t>(i)]]) <= 0)
            --k;
        hull[static_cast<std::size_t>(k++)] = order[static_cast<std::size_t>(i)];
    }
    for (int i = m - 2, lower = k + 1; i >= 0; --i) {
        while (k >= lower && orient2d(ps[hull[static_cast<std::size_t>(k - 2)]],
                                      ps[hull[static_cast<std::size_t>(k - 1)]],
                                      ps[order[static_cast<std::size_t>(i)]]) <= 0)
            --k;
        hull[static_cast<std::size_t>(k++)] = order[static_cast<std::size_t>(i)];
    }
    hull.resize(static_cast<std::size_t>(k - 1));
    return hull;  // starts at the lexicographic minimum by construction
}

IndexList hull_ccw_2d(const PointSet& ps) {
    IndexList all(static_cast<std::size_t>(ps.size()));
    for (int i = 0; i < ps.size(); ++i) all[static_cast<std::size_t>(i)] = i;
    return hull_ccw_2d(ps, all);
}

bool convex_position_2d(const PointSet& ps, const IndexList& subset) {
    return hull_ccw_2d(ps, subset).size() == subset.size();
}

bool convex_position_2d(const PointSet& ps) {
    return hull_ccw_2d(ps).size() == static_cast<std::size_t>(ps.size());
}

bool point_on_segment(const Point& p, const Point& a, const Point& b) {
    if (orient2d(a, b, p) != 0) return false;
    for (int c = 0; c < 2; ++c) {
        const Rat& lo = a[static_cast<std::size_t>(c)] < b[static_cast<std::size_t>(c)]
                            ? a[static_cast<std::size_t>(c)]
                            : b[static_cast<std::size_t>(c)];
        const Rat& hi = a[static_cast<std::size_t>(c)] < b[static_cast<std::size_t>(c)]
                            ? b[static_cast<std::size_t>(c)]
                            : a[static_cast<std::size_t>(c)];
        if (p[static_cast<std::size_t>(c)] < lo || p[static_cast<std::size_t>(c)] > hi) return false;
    }
    return true;
}

bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d) {
    int o1 = orient2d(a, b, c), o2 = orient2d(a, b, d);
    int o3 = orient2d(c, d, a), o4 = orient2d(c, d, b);
    if (o1 != o2 && o3 != o4) return true;
    if (o1 == 0 && point_on_segment(c, a, b)) return true;
    if (o2 == 0 && point_on_segment(d, a, b)) return true;
    if (o3 == 0 && point_on_segment(a, c, d)) return true;
    if (o4 == 0 && point_on_segment(b, c, d)) return true;
    return false;
}

}  // namespace nerveforge
