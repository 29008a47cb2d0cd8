#include "nerveforge/randgen.h"

#include <algorithm>
#include <random>
#include <set>

#include "nerveforge/errors.h"
#include "nerveforge/linalg.h"

namespace nerveforge {

namespace {

constexpr long kBoxRange = 4096;  // keeps (d+1)-tuple determinants in int64 for d <= 4

int mat_rank(Mat m) {
    int rows = (int)m.size();
    int cols = rows ? (int)m[0].size() : 0;
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][c] != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(m[rank], m[piv]);
        for (int r = rank + 1; r < rows; ++r) {
            if (m[r][c] == 0) continue;
            Rat f = m[r][c] / m[rank][c];
            for (int cc = c; cc < cols; ++cc) m[r][cc] -= f * m[rank][cc];
        }
        ++rank;
    }
    return rank;
}

long long minor_det(const std::vector<std::vector<long long>>& m,
                    const std::vector<int>& rows, const std::vector<int>& cols) {
    int k = (int)rows.size();
    if (k == 1) return m[rows[0]][cols[0]];
    long long acc = 0;
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    for (int j = 0; j < k; ++j) {
        std::vector<int> sub_cols;
        for (int c = 0; c < k; ++c)
            if (c != j) sub_cols.push_back(cols[c]);
        long long term = m[rows[0]][cols[j]] * minor_det(m, sub_rows, sub_cols);
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

// exact for |coords| <= kBoxRange and d <= 4 (bound: d! * (2*kBoxRange)^d < 2^63)
bool tuple_flat_int(const std::vector<std::vector<long>>& pts, const std::vector<int>& tuple) {
    int d = (int)pts[0].size();
    std::vector<std::vector<long long>> m(d, std::vector<long long>(d));
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c)
            m[r][c] = pts[tuple[r + 1]][c] - pts[tuple[0]][c];
    std::vector<int> rows(d), cols(d);
    for (int i = 0; i < d; ++i) rows[i] = cols[i] = i;
    return minor_det(m, rows, cols) == 0;
}

bool tuple_flat_rat(const std::vector<std::vector<long>>& pts, const std::vector<int>& tuple) {
    int d = (int)pts[0].size();
    Mat m(d, Row(d));
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c)
            m[r][c] = Rat(pts[tuple[r + 1]][c] - pts[tuple[0]][c]);
    return det_sign(m) == 0;
}

// Whether appending pts.back() broke general position. Invariant maintained
// incrementally: every prefix of size <= d+1 is affinely independent, and every
// (d+1)-tuple containing the newest point has nonzero volume. Together these
// make all (d+1)-tuples of the final set nondegenerate.
bool newest_breaks_gp(const std::vector<std::vector<long>>& pts, int d) {
    int m = (int)pts.size();
    if (m < 2) return false;
    if (m <= d + 1) {
        Mat diff(m - 1, Row(d));
        for (int r = 0; r + 1 < m; ++r)
            for (int c = 0; c < d; ++c) diff[r][c] = Rat(pts[r + 1][c] - pts[0][c]);
        return mat_rank(std::move(diff)) < m - 1;
    }
    std::vector<int> tuple(d + 1);
    tuple[d] = m - 1;
    std::vector<int> pick(d);
    for (int i = 0; i < d; ++i) pick[i] = i;
    while (true) {
        for (int i = 0; i < d; ++i) tuple[i] = pick[i];
        bool flat = d <= 4 ? tuple_flat_int(pts, tuple) : tuple_flat_rat(pts, tuple);
        if (flat) return true;
        int j = d - 1;
        while (j >= 0 && pick[j] == (m - 1) - d + j) --j;
        if (j < 0) break;
        ++pick[j];
        for (int t = j + 1; t < d; ++t) pick[t] = pick[t - 1] + 1;
    }
    return false;
}

}  // namespace

RandomMode random_mode_from_name(const std::string& name) {
    if (name == "uniform-box") return RandomMode::uniform_box;
    if (name == "convex-position") return RandomMode::convex_position;
    if (name == "moment-curve") return RandomMode::moment_curve;
    throw UnknownConfigError("unknown random mode: " + name);
}

std::string random_mode_name(RandomMode mode) {
    switch (mode) {
        case RandomMode::uniform_box: return "uniform-box";
        case RandomMode::convex_position: return "convex-position";
        case RandomMode::moment_curve: return "moment-curve";
    }
    return "?";
}

PointSet random_points(int n, int d, uint64_t seed, RandomMode mode) {
    if (n < 1 || d < 1) throw PreconditionError("need n >= 1 and d >= 1");
    std::mt19937_64 rng(seed ^ 0xd1b54a32d192ed03ULL);
    PointSet out;
    out.dim = d;

    if (mode == RandomMode::convex_position) {
        if (d != 2) throw DimensionError("convex-position mode is planar");
        std::set<long> ts;
        while ((int)ts.size() < n) ts.insert((long)(rng() % 4001) - 2000);
        for (long t : ts) {
            Rat tt(t);
            Rat den = 1 + tt * tt;
            out.points.push_back({(1 - tt * tt) / den, (2 * tt) / den});
        }
        return out;
    }
    if (mode == RandomMode::moment_curve) {
        std::set<long> ts;
        while ((int)ts.size() < n) ts.insert((long)(rng() % 201) - 100);
        for (long t : ts) {
            Point p;
            Rat pw(t);
            for (int c = 0; c < d; ++c) {
                p.push_back(pw);
                pw *= t;
            }
            out.points.push_back(std::move(p));
        }
        return out;
    }

    std::vector<std::vector<long>> pts;
    int tries = 0;
    while ((int)pts.size() < n) {
        std::vector<long> cand(d);
        for (int c = 0; c < d; ++c) cand[c] = (long)(rng() % (2 * kBoxRange + 1)) - kBoxRange;
        pts.push_back(std::move(cand));
        if (newest_breaks_gp(pts, d)) {
            pts.pop_back();
            if (++tries > 64 * n + 256)
                throw RetriesExhaustedError("could not keep the random set in general position");
        }
    }
    for (auto& q : pts) {
        Point p;
        for (long v : q) p.push_back(Rat(v));
        out.points.push_back(std::move(p));
    }
    return out;
}

Point AffineMap::apply(const Point& p) const {
    int d = (int)shift.size();
    Point out(d, Rat(0));
    for (int r = 0; r < d; ++r) {
        for (int c = 0; c < d; ++c) out[r] += linear[r][c] * p[c];
        out[r] += shift[r];
    }
    return out;
}

PointSet AffineMap::apply(const PointSet& ps) const {
    PointSet out;
    out.dim = ps.dim;
    for (auto& p : ps.points) out.points.push_back(apply(p));
    return out;
}

AffineMap random_unimodular_map(int d, uint64_t seed) {
    if (d < 1) throw PreconditionError("need d >= 1");
    std::mt19937_64 rng(seed ^ 0xa24baed4963ee407ULL);
    Mat a(d, Row(d, Rat(0)));
    for (int i = 0; i < d; ++i) a[i][i] = 1;
    int shears = 2 * d + 2;
    for (int s = 0; s < shears && d > 1; ++s) {
        int i = (int)(rng() % d);
        int j = (int)(rng() % d);
        if (i == j) continue;
        long c = (long)(rng() % 7) - 3;
        // row_i += c * row_j keeps the determinant at one
        for (int col = 0; col < d; ++col) a[i][col] += Rat(c) * a[j][col];
    }
    AffineMap map;
    map.linear = std::move(a);
    map.shift.assign(d, Rat(0));
    for (int i = 0; i < d; ++i) map.shift[i] = Rat((long)(rng() % 201) - 100);
    return map;
}

}  // namespace nerveforge
