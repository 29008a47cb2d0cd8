#include "nerveforge/subsetfind.h"

#include <algorithm>
#include <functional>
#include <optional>

#include "nerveforge/errors.h"

namespace nerveforge {

namespace {

struct OrientFn {
    const PointSet* ps;
    std::optional<Chirotope> chi;

    int operator()(Index a, Index b, Index c) const {
        if (chi) return chi->sign_any_order({a, b, c});
        return orient2d((*ps)[a], (*ps)[b], (*ps)[c]);
    }
};

}  // namespace

IndexList find_convex_subset_2d(const PointSet& ps, int k, uint64_t budget) {
    ps.validate();
    if (ps.dim != 2) throw DimensionError("convex subset scan works in the plane");
    if (k < 3) throw PreconditionError("need k >= 3");
    int n = ps.size();
    if (k > n) throw NotFoundError("fewer points than requested");
    OrientFn orient{&ps, std::nullopt};
    if (n <= 48) orient.chi = chirotope(ps);

    std::vector<Index> lex(n);
    for (int i = 0; i < n; ++i) lex[i] = i;
    std::sort(lex.begin(), lex.end(), [&](Index a, Index b) { return ps[a] < ps[b]; });

    uint64_t work = 0;
    // Root r is the lex-min vertex of the polygon; the others sit at
    // increasing angle around it and every turn along the chain is a left
    // turn, with the closing turn back to r checked on completion.
    for (int ri = 0; ri < n; ++ri) {
        Index r = lex[ri];
        std::vector<Index> s(lex.begin() + ri + 1, lex.end());
        if ((int)s.size() < k - 1) break;
        std::sort(s.begin(), s.end(), [&](Index a, Index b) {
            int o = orient(r, a, b);
            if (o != 0) return o > 0;
            // collinear with r: nearer first
            return ps[a] < ps[b];
        });
        int m = (int)s.size();
        // best[i][j]: longest chain r -> ... -> s[i] -> s[j], vertex count
        std::vector<std::vector<int>> best(m, std::vector<int>(m, 0));
        std::vector<std::vector<int>> from(m, std::vector<int>(m, -2));
        for (int j = 0; j < m; ++j)
            for (int i = 0; i < j; ++i)
                if (orient(r, s[i], s[j]) > 0) {
                    best[i][j] = 3;
                    from[i][j] = -1;  // chain begins r -> s[i] -> s[j]
                }
        IndexList found;
        for (int j = 1; j < m && found.empty(); ++j) {
            for (int i = 0; i < j && found.empty(); ++i) {
                // close the polygon at s[j] whenever it is already long enough
                if (best[i][j] >= k && orient(s[i], s[j], r) > 0) {
                    IndexList poly = {s[j], s[i]};
                    int a = i, b = j;
                    while (from[a][b] >= 0) {
                        int p = from[a][b];
                        poly.push_back(s[p]);
                        b = a;
                        a = p;
                    }
                    poly.push_back(r);
                    found = poly;
                    break;
                }
                if (best[i][j] == 0) continue;
                for (int t = j + 1; t < m; ++t) {
                    if (++work > budget) throw BudgetExceededError("convex subset scan budget");
                    if (orient(s[i], s[j], s[t]) > 0 && best[i][j] + 1 > best[j][t]) {
                        best[j][t] = best[i][j] + 1;
                        from[j][t] = i;
                    }
                }
            }
        }
        if (!found.empty()) {
            // any subset of a convex polygon stays in convex position
            std::sort(found.begin(), found.end());
            found.resize(k);
            return found;
        }
    }
    throw NotFoundError("no convex subset of size " + std::to_string(k));
}

namespace {

struct CyclicScan {
    const PointSet* ps;
    int n, dim, m;
    uint64_t budget, work = 0;
    IndexList chosen;
    int target_sign = 0;
    bool reversible;  // reversal flips each sign exactly when C(d+1,2) is odd

    bool sign_ok(Index next) {
        // every (dim+1)-tuple ending at next, others drawn from the prefix
        int need = dim;
        if ((int)chosen.size() < need) return true;
        IndexList pick(need);
        std::function<bool(int, int)> rec = [&](int start, int got) -> bool {
            if (got == need) {
                IndexList tuple(pick.begin(), pick.end());
                tuple.push_back(next);
                int s = orientation(*ps, tuple);
                if (s == 0) return false;
                if (target_sign == 0) {
                    if (s < 0 && !reversible) return false;
                    target_sign = s;
                    return true;
                }
                return s == target_sign;
            }
            for (int i = start; i <= (int)chosen.size() - (need - got); ++i) {
                pick[got] = chosen[i];
                if (!rec(i + 1, got + 1)) return false;
            }
            return true;
        };
        return rec(0, 0);
    }

    bool extend(int start) {
        if ((int)chosen.size() == m) return true;
        int remaining = m - (int)chosen.size();
        for (int i = start; i <= n - remaining; ++i) {
            if (++work > budget) throw BudgetExceededError("cyclic subset scan budget");
            int saved = target_sign;
            if (!sign_ok(i)) {
                target_sign = saved;
                continue;
            }
            chosen.push_back(i);
            if (extend(i + 1)) return true;
            chosen.pop_back();
            target_sign = saved;
        }
        return false;
    }
};

}  // namespace

IndexList find_cyclic_subpolytope(const PointSet& ps, int m, uint64_t budget) {
    ps.validate();
    int d = ps.dim;
    if (m < d + 2) throw PreconditionError("need at least d + 2 points");
    if (m > ps.size()) throw NotFoundError("fewer points than requested");
    if (d == 2) {
        IndexList conv = find_convex_subset_2d(ps, m, budget);
        return hull_ccw_2d(ps, conv);  // ccw from the lex-min vertex is all-positive
    }
    CyclicScan scan;
    scan.ps = &ps;
    scan.n = ps.size();
    scan.dim = d;
    scan.m = m;
    scan.budget = budget;
    scan.reversible = ((d + 1) * d / 2) % 2 == 1;
    if (!scan.extend(0)) throw NotFoundError("no cyclic subset of size " + std::to_string(m));
    IndexList out = scan.chosen;
    if (scan.target_sign < 0) std::reverse(out.begin(), out.end());
    return out;
}

}  // namespace nerveforge
