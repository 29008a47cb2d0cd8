#include "nerveforge/linalg.h"

#include <cstddef>

#include "nerveforge/errors.h"

namespace nerveforge {

namespace {

std::size_t uz(int i) { return static_cast<std::size_t>(i); }

// Row-reduce in place; returns pivot column per row rank order.
std::vector<int> rref(Mat& m) {
    int rows = static_cast<int>(m.size());
    int cols = rows ? static_cast<int>(m[0].size()) : 0;
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int pr = -1;
        for (int i = r; i < rows; ++i)
            if (m[uz(i)][uz(c)] != 0) { pr = i; break; }
        if (pr < 0) continue;
        std::swap(m[uz(pr)], m[uz(r)]);
        Rat inv = m[uz(r)][uz(c)];
        for (int j = c; j < cols; ++j) m[uz(r)][uz(j)] /= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || m[uz(i)][uz(c)] == 0) continue;
            Rat f = m[uz(i)][uz(c)];
            for (int j = c; j < cols; ++j) m[uz(i)][uz(j)] -= f * m[uz(r)][uz(j)];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

int det_sign(Mat m) {
    int n = static_cast<int>(m.size());
    int sign = 1;
    for (int c = 0; c < n; ++c) {
        int pr = -1;
        for (int r = c; r < n; ++r)
            if (m[uz(r)][uz(c)] != 0) { pr = r; break; }
        if (pr < 0) return 0;
        if (pr != c) {
            std::swap(m[uz(pr)], m[uz(c)]);
            sign = -sign;
        }
        if (sgn(m[uz(c)][uz(c)]) < 0) sign = -sign;
        for (int r = c + 1; r < n; ++r) {
            if (m[uz(r)][uz(c)] == 0) continue;
            Rat f = m[uz(r)][uz(c)] / m[uz(c)][uz(c)];
            for (int j = c; j < n; ++j) m[uz(r)][uz(j)] -= f * m[uz(c)][uz(j)];
        }
    }
    return sign;
}

std::optional<Row> nullspace_vector(Mat m) {
    int cols = m.empty() ? 0 : static_cast<int>(m[0].size());
    auto pivots = rref(m);
    std::vector<bool> is_pivot(uz(cols), false);
    for (int c : pivots) is_pivot[uz(c)] = true;
    int free_col = -1;
    for (int c = 0; c < cols; ++c)
        if (!is_pivot[uz(c)]) { free_col = c; break; }
    if (free_col < 0) return std::nullopt;

    Row v(uz(cols), Rat(0));
    v[uz(free_col)] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
        v[uz(pivots[r])] = -m[r][uz(free_col)];
    return v;
}

std::optional<Row> solve_linear(Mat m, Row rhs) {
    int rows = static_cast<int>(m.size());
    int cols = rows ? static_cast<int>(m[0].size()) : 0;
    for (int r = 0; r < rows; ++r) m[uz(r)].push_back(rhs[uz(r)]);
    auto pivots = rref(m);
    for (std::size_t r = 0; r < m.size(); ++r) {
        bool zero = true;
        for (int c = 0; c < cols; ++c)
            if (m[r][uz(c)] != 0) { zero = false; break; }
        if (zero && m[r][uz(cols)] != 0) return std::nullopt;
    }
    Row x(uz(cols), Rat(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[uz(pivots[r])] = m[r][uz(cols)];
    return x;
}

LpFeasibility lp_feasible(const Mat& a_in, const Row& b_in) {
    int m = static_cast<int>(a_in.size());
    int n = m ? static_cast<int>(a_in[0].size()) : 0;

    // Tableau over columns [original | artificial | rhs]; rows flipped so
    // rhs >= 0 and the artificial basis is the identity.
    std::vector<int> row_flip(uz(m), 1);
    Mat t(uz(m), Row(uz(n + m + 1), Rat(0)));
    for (int r = 0; r < m; ++r) {
        row_flip[uz(r)] = sgn(b_in[uz(r)]) < 0 ? -1 : 1;
        for (int c = 0; c < n; ++c) t[uz(r)][uz(c)] = Rat(row_flip[uz(r)]) * a_in[uz(r)][uz(c)];
        t[uz(r)][uz(n + r)] = 1;
        t[uz(r)][uz(n + m)] = Rat(row_flip[uz(r)]) * b_in[uz(r)];
    }

    // Reduced-cost row for min(sum of artificials): z[j] = -sum_r t[r][j].
    Row z(uz(n + m + 1), Rat(0));
    for (int r = 0; r < m; ++r)
        for (int j = 0; j <= n + m; ++j) z[uz(j)] -= t[uz(r)][uz(j)];
    for (int r = 0; r < m; ++r) z[uz(n + r)] = 0;

    std::vector<int> basis(uz(m));
    for (int r = 0; r < m; ++r) basis[uz(r)] = n + r;

    for (;;) {
        int enter = -1;  // Bland: smallest index with negative reduced cost
        for (int j = 0; j < n + m; ++j)
            if (sgn(z[uz(j)]) < 0) { enter = j; break; }
        if (enter < 0) break;

        int leave = -1;
        Rat best;
        for (int r = 0; r < m; ++r) {
            if (sgn(t[uz(r)][uz(enter)]) <= 0) continue;
            Rat ratio = t[uz(r)][uz(n + m)] / t[uz(r)][uz(enter)];
            if (leave < 0 || ratio < best ||
                (ratio == best && basis[uz(r)] < basis[uz(leave)])) {
                best = ratio;
                leave = r;
            }
        }
        if (leave < 0) throw Error("phase-1 objective unbounded; inconsistent tableau");

        Rat piv = t[uz(leave)][uz(enter)];
        for (int j = 0; j <= n + m; ++j) t[uz(leave)][uz(j)] /= piv;
        for (int r = 0; r < m; ++r) {
            if (r == leave || t[uz(r)][uz(enter)] == 0) continue;
            Rat f = t[uz(r)][uz(enter)];
            for (int j = 0; j <= n + m; ++j) t[uz(r)][uz(j)] -= f * t[uz(leave)][uz(j)];
        }
        if (z[uz(enter)] != 0) {
            Rat f = z[uz(enter)];
            for (int j = 0; j <= n + m; ++j) z[uz(j)] -= f * t[uz(leave)][uz(j)];
        }
        basis[uz(leave)] = enter;
    }

    LpFeasibility out;
    Rat objective = -z[uz(n + m)];
    if (objective == 0) {
        Row x(uz(n), Rat(0));
        for (int r = 0; r < m; ++r)
            if (basis[uz(r)] < n) x[uz(basis[uz(r)])] = t[uz(r)][uz(n + m)];
        out.solution = std::move(x);
        return out;
    }

    // Farkas row from the artificial columns' reduced costs: y_r = 1 - zbar_r,
    // undoing the row flips.
    Row y(uz(m));
    for (int r = 0; r < m; ++r)
        y[uz(r)] = Rat(row_flip[uz(r)]) * (Rat(1) - z[uz(n + r)]);
    // Verify the certificate against the original data before returning it.
    Rat yb(0);
    for (int r = 0; r < m; ++r) yb += y[uz(r)] * b_in[uz(r)];
    if (sgn(yb) <= 0) throw Error("invalid infeasibility certificate (y.b <= 0)");
    for (int c = 0; c < n; ++c) {
        Rat ya(0);
        for (int r = 0; r < m; ++r) ya += y[uz(r)] * a_in[uz(r)][uz(c)];
        if (sgn(ya) > 0) throw Error("invalid infeasibility certificate (y.A has a positive entry)");
    }
    out.farkas = std::move(y);
    return out;
}

}  // namespace nerveforge
