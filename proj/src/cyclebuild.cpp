#include "nerveforge/cyclebuild.h"

#include <algorithm>
#include <array>
#include <random>

#include "nerveforge/errors.h"
#include "nerveforge/nerve.h"
#include "nerveforge/predicates.h"

namespace nerveforge {

namespace {

using Vec2 = std::vector<Rat>;

Rat cross2(const Vec2& a, const Vec2& b) { return a[0] * b[1] - a[1] * b[0]; }
Rat dot2(const Vec2& a, const Vec2& b) { return a[0] * b[0] + a[1] * b[1]; }

Vec2 dir_from(const Point& apex, const Point& p) { return {p[0] - apex[0], p[1] - apex[1]}; }

// counterclockwise from the positive x axis; directions are never zero
bool angle_less(const Vec2& a, const Vec2& b) {
    auto half = [](const Vec2& d) { return (d[1] < 0 || (d[1] == 0 && d[0] < 0)) ? 1 : 0; };
    int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    return cross2(a, b) > 0;
}

bool planar_degenerate(const PointSet& flat) {
    for (int i = 0; i < flat.size(); ++i)
        for (int j = i + 1; j < flat.size(); ++j)
            if (points_equal(flat[i], flat[j])) return true;
    for (int i = 0; i < flat.size(); ++i)
        for (int j = i + 1; j < flat.size(); ++j)
            for (int k = j + 1; k < flat.size(); ++k)
                if (orient2d(flat[i], flat[j], flat[k]) == 0) return true;
    return false;
}

}  // namespace

PointSet PlaneProjection::apply(const PointSet& ps) const {
    PointSet flat;
    flat.dim = 2;
    flat.points.reserve(ps.points.size());
    for (auto& p : ps.points) {
        Rat a = 0, b = 0;
        for (int c = 0; c < ps.dim; ++c) {
            a += u[c] * p[c];
            b += v[c] * p[c];
        }
        flat.points.push_back({a, b});
    }
    return flat;
}

std::pair<PointSet, PlaneProjection> project_generic(const PointSet& ps, uint64_t seed,
                                                     int max_tries) {
    ps.validate();
    int d = ps.dim;
    if (d < 2) throw DimensionError("projection needs dimension >= 2");
    if (d == 2) {
        PlaneProjection id{{Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
        PointSet flat = id.apply(ps);
        if (planar_degenerate(flat))
            throw NotGeneralPositionError("planar points are not in general position");
        return {std::move(flat), std::move(id)};
    }
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    for (int attempt = 0; attempt < max_tries; ++attempt) {
        PlaneProjection pr;
        pr.u.assign(d, Rat(0));
        pr.v.assign(d, Rat(0));
        if (attempt == 0) {
            // first try a near-axis pair; random mixes only on retry
            pr.u[0] = 1;
            pr.v[1] = 1;
            for (int c = 2; c < d; ++c) {
                pr.u[c] = Rat(1, 7 + c);
                pr.v[c] = Rat(1, 13 + c);
            }
        } else {
            for (int c = 0; c < d; ++c) {
                pr.u[c] = Rat((long)(rng() % 39) - 19);
                pr.v[c] = Rat((long)(rng() % 39) - 19);
            }
        }
        PointSet flat = pr.apply(ps);
        if (planar_degenerate(flat)) continue;
        return {std::move(flat), std::move(pr)};
    }
    throw RetriesExhaustedError("no generic projection found; input is degenerate");
}

Hyperplane ham_sandwich_line(const PointSet& flat, const IndexList& m1, const IndexList& m2,
                             const Hyperplane* not_parallel_to) {
    if (flat.dim != 2) throw DimensionError("bisecting line lives in the plane");
    IndexList all = m1;
    all.insert(all.end(), m2.begin(), m2.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    int cap1 = (int)m1.size() / 2, cap2 = (int)m2.size() / 2;
    for (size_t a = 0; a < all.size(); ++a) {
        for (size_t b = a + 1; b < all.size(); ++b) {
            if (points_equal(flat[all[a]], flat[all[b]])) continue;
            Hyperplane line = line_through(flat[all[a]], flat[all[b]]);
            if (not_parallel_to &&
                cross2(line.normal, not_parallel_to->normal) == 0)
                continue;
            int p1 = 0, q1 = 0, p2 = 0, q2 = 0;
            for (Index i : m1) {
                int s = line.side(flat[i]);
                if (s > 0) ++p1;
                if (s < 0) ++q1;
            }
            for (Index i : m2) {
                int s = line.side(flat[i]);
                if (s > 0) ++p2;
                if (s < 0) ++q2;
            }
            if (p1 <= cap1 && q1 <= cap1 && p2 <= cap2 && q2 <= cap2) return line;
        }
    }
    throw Error("no bisecting line through two points found");
}

namespace {

struct Frame {
    Point apex;
    Hyperplane l1, l2;
    std::vector<Vec2> rays;           // 4 rays, counterclockwise
    std::vector<std::array<int, 2>> quad_signs;  // (side of l1, side of l2) per quadrant
};

// sector machinery shares the sign conventions through this table
int classify_quadrant(const Frame& fr, int s1, int s2) {
    for (int q = 0; q < 4; ++q)
        if (fr.quad_signs[q][0] == s1 && fr.quad_signs[q][1] == s2) return q;
    throw Error("no quadrant for sign pair");
}

std::optional<Frame> build_frame(const PointSet& flat, const std::vector<Rat>& n1) {
    int N = flat.size();
    std::vector<Rat> vals(N);
    for (int i = 0; i < N; ++i) vals[i] = n1[0] * flat[i][0] + n1[1] * flat[i][1];
    std::vector<Rat> sorted = vals;
    std::sort(sorted.begin(), sorted.end());
    int lo = N / 2 - 1, hi = N / 2;
    if (sorted[lo] == sorted[hi]) return std::nullopt;  // a point would sit on the line
    Rat c1 = (sorted[lo] + sorted[hi]) / 2;

    Frame fr;
    fr.l1 = Hyperplane{n1, c1};
    IndexList m1, m2;
    for (int i = 0; i < N; ++i) (vals[i] < c1 ? m1 : m2).push_back(i);
    fr.l2 = ham_sandwich_line(flat, m1, m2, &fr.l1);

    // apex solves the 2x2 system l1, l2
    Rat det = cross2(fr.l1.normal, fr.l2.normal);
    fr.apex = {(fr.l1.offset * fr.l2.normal[1] - fr.l2.offset * fr.l1.normal[1]) / det,
               (fr.l1.normal[0] * fr.l2.offset - fr.l2.normal[0] * fr.l1.offset) / det};

    Vec2 t1{-fr.l1.normal[1], fr.l1.normal[0]};
    Vec2 t2{-fr.l2.normal[1], fr.l2.normal[0]};
    fr.rays = {t1, {-t1[0], -t1[1]}, t2, {-t2[0], -t2[1]}};
    std::sort(fr.rays.begin(), fr.rays.end(), angle_less);
    fr.quad_signs.resize(4);
    for (int q = 0; q < 4; ++q) {
        Vec2 mid{fr.rays[q][0] + fr.rays[(q + 1) % 4][0], fr.rays[q][1] + fr.rays[(q + 1) % 4][1]};
        Point probe{fr.apex[0] + mid[0], fr.apex[1] + mid[1]};
        fr.quad_signs[q] = {fr.l1.side(probe), fr.l2.side(probe)};
    }
    return fr;
}

std::optional<std::vector<Sector>> try_subdivision(const PointSet& flat, int n, int d,
                                                   const std::vector<Rat>& n1) {
    auto frame = build_frame(flat, n1);
    if (!frame) return std::nullopt;
    const Frame& fr = *frame;

    std::vector<IndexList> quad(4);
    for (int i = 0; i < flat.size(); ++i) {
        int s1 = fr.l1.side(flat[i]);
        if (s1 == 0) return std::nullopt;
        int s2 = fr.l2.side(flat[i]);
        if (s2 != 0) {
            quad[classify_quadrant(fr, s1, s2)].push_back(i);
            continue;
        }
        // on the bisecting line: find the ray, join the quadrant that ends there
        Vec2 u = dir_from(fr.apex, flat[i]);
        int ray = -1;
        for (int r = 0; r < 4; ++r)
            if (cross2(u, fr.rays[r]) == 0 && dot2(u, fr.rays[r]) > 0) ray = r;
        if (ray < 0) throw Error("on-line point matches no ray");
        quad[(ray + 3) % 4].push_back(i);
    }
    for (int q = 0; q < 4; ++q)
        if ((int)quad[q].size() < d + 1) return std::nullopt;

    std::vector<std::vector<Sector>> per_quad(4);
    for (int q = 0; q < 4; ++q) {
        IndexList mem = quad[q];
        std::sort(mem.begin(), mem.end(), [&](Index a, Index b) {
            Rat c = cross2(dir_from(fr.apex, flat[a]), dir_from(fr.apex, flat[b]));
            if (c != 0) return c > 0;
            return a < b;
        });
        // angle classes stay together so every divider ray is point-free
        std::vector<IndexList> classes;
        for (Index i : mem) {
            if (!classes.empty() &&
                cross2(dir_from(fr.apex, flat[classes.back().back()]),
                       dir_from(fr.apex, flat[i])) == 0)
                classes.back().push_back(i);
            else
                classes.push_back({i});
        }
        int remaining = (int)mem.size();
        Vec2 cur_start = fr.rays[q];
        IndexList cur;
        for (size_t ci = 0; ci < classes.size(); ++ci) {
            cur.insert(cur.end(), classes[ci].begin(), classes[ci].end());
            remaining -= (int)classes[ci].size();
            if ((int)cur.size() >= d + 1 && remaining >= d + 1) {
                Vec2 a = dir_from(fr.apex, flat[cur.back()]);
                Vec2 b = dir_from(fr.apex, flat[classes[ci + 1].front()]);
                Vec2 divider{a[0] + b[0], a[1] + b[1]};
                per_quad[q].push_back({fr.apex, cur_start, divider, cur, q});
                cur_start = divider;
                cur.clear();
            }
        }
        per_quad[q].push_back({fr.apex, cur_start, fr.rays[(q + 1) % 4], cur, q});
    }

    int total = 0;
    for (auto& v : per_quad) total += (int)v.size();
    if (total < n) return std::nullopt;
    while (total > n) {
        int best = 0;
        for (int q = 1; q < 4; ++q)
            if (per_quad[q].size() > per_quad[best].size()) best = q;
        if (per_quad[best].size() < 2) throw Error("merge ran out of sector pairs");
        Sector& a = per_quad[best][per_quad[best].size() - 2];
        Sector& b = per_quad[best].back();
        a.members.insert(a.members.end(), b.members.begin(), b.members.end());
        a.end_ray = b.end_ray;
        per_quad[best].pop_back();
        --total;
    }

    std::vector<Sector> out;
    for (int q = 0; q < 4; ++q)
        for (auto& s : per_quad[q]) out.push_back(std::move(s));
    for (auto& s : out)
        if (cross2(s.start_ray, s.end_ray) <= 0) throw Error("sector spans half the plane");
    return out;
}

const std::vector<std::vector<Rat>>& l1_candidates() {
    static const std::vector<std::vector<Rat>> cands = [] {
        std::vector<std::vector<Rat>> c;
        auto add = [&](long x, long y) { c.push_back({Rat(x), Rat(y)}); };
        add(1, 0);
        add(0, 1);
        add(1, 1);
        add(1, -1);
        add(2, 1);
        add(1, 2);
        add(2, -1);
        add(1, -2);
        add(3, 1);
        add(1, 3);
        add(3, -1);
        add(1, -3);
        add(3, 2);
        add(2, 3);
        add(4, 1);
        add(1, 4);
        return c;
    }();
    return cands;
}

}  // namespace

std::vector<Sector> sector_subdivision(const PointSet& flat, int n, int d, bool relaxed) {
    flat.validate();
    if (flat.dim != 2) throw DimensionError("sector subdivision works on planar points");
    if (n < 4) throw PreconditionError("need at least four sectors");
    if (d < 2) throw DimensionError("sector payload needs d >= 2");
    int need = relaxed ? n * (d + 1) + 1 : n * d + n + 4 * d;
    if (flat.size() < need) throw TooFewPointsError("too few points for the sector subdivision");
    if (planar_degenerate(flat))
        throw NotGeneralPositionError("planar points are not in general position");
    for (auto& n1 : l1_candidates()) {
        auto got = try_subdivision(flat, n, d, n1);
        if (got) return *got;
    }
    throw RetriesExhaustedError("no median-line orientation yielded a usable subdivision");
}

namespace {

// largest angle within a wedge of width < pi, ties to the larger index
Index max_angle_member(const PointSet& flat, const Point& apex, const IndexList& mem) {
    Index best = mem.front();
    for (Index i : mem) {
        Rat c = cross2(dir_from(apex, flat[best]), dir_from(apex, flat[i]));
        if (c > 0 || (c == 0 && i > best)) best = i;
    }
    return best;
}

}  // namespace

PartitionResult cycle_partition(const GraphSpec& target, const PointSet& ps, uint64_t seed,
                                bool relaxed) {
    ps.validate();
    if (!target.is_cycle()) throw PreconditionError("target graph is not a cycle");
    int n = target.n;
    if (n < 4) throw PreconditionError("cycles shorter than four are out of scope");
    int d = ps.dim;
    int need = relaxed ? n * (d + 1) + 1 : n * d + n + 4 * d;
    if (ps.size() < need) throw TooFewPointsError("too few points for the cycle construction");

    auto projected = project_generic(ps, seed);
    const PointSet& flat = projected.first;
    std::vector<Sector> sectors = sector_subdivision(flat, n, d, relaxed);
    const Point apex = sectors.front().apex;

    int start = -1;
    for (int s = 0; s < n && start < 0; ++s)
        if ((int)sectors[s].members.size() >= d + 2) start = s;
    if (start < 0) throw Error("no sector holds d+2 points despite the pigeonhole count");
    std::rotate(sectors.begin(), sectors.begin() + start, sectors.end());

    // vertex order along the target cycle; position p of the chain gets walk[p]
    std::vector<int> walk{0};
    auto adj = target.adjacency();
    walk.push_back(std::min(adj[0][0], adj[0][1]));
    while ((int)walk.size() < n) {
        int cur = walk.back(), prev = walk[walk.size() - 2];
        walk.push_back(adj[cur][0] == prev ? adj[cur][1] : adj[cur][0]);
    }

    PartitionResult out;
    out.partition.point_count = ps.size();
    out.partition.parts.resize(n);
    std::vector<IndexList> chain(n);

    {
        const IndexList& mem = sectors[0].members;
        IndexList simplex(mem.begin(), mem.begin() + (d + 2));
        RadonPair rp = radon_split(ps, simplex);
        chain[0] = rp.part_a;
        chain[1] = rp.part_b;
        chain[1].insert(chain[1].end(), mem.begin() + (d + 2), mem.end());
        RadonStepEvent ev;
        ev.level = 1;
        ev.part_a = walk[0];
        ev.part_b = walk[1];
        ev.simplex = simplex;
        ev.side_a = rp.part_a;
        ev.side_b = rp.part_b;
        out.trace.events.emplace_back(ev);
    }
    for (int k = 2; k <= n; ++k) {
        int pos = k - 1;
        Index x = max_angle_member(flat, apex, chain[pos]);
        const IndexList& mem = sectors[pos].members;
        IndexList simplex{x};
        simplex.insert(simplex.end(), mem.begin(), mem.begin() + (d + 1));
        RadonPair rp = radon_split(ps, simplex);
        bool x_in_a = std::find(rp.part_a.begin(), rp.part_a.end(), x) != rp.part_a.end();
        const IndexList& keep = x_in_a ? rp.part_a : rp.part_b;
        const IndexList& pass = x_in_a ? rp.part_b : rp.part_a;
        for (Index i : keep)
            if (i != x) chain[pos].push_back(i);
        IndexList& next = chain[(pos + 1) % n];
        next.insert(next.end(), pass.begin(), pass.end());
        next.insert(next.end(), mem.begin() + (d + 1), mem.end());
        RadonStepEvent ev;
        ev.level = k;
        ev.part_a = walk[pos];
        ev.part_b = walk[(pos + 1) % n];
        ev.simplex = simplex;
        ev.side_a = keep;
        ev.side_b = pass;
        out.trace.events.emplace_back(ev);
    }
    for (int pos = 0; pos < n; ++pos) {
        SectorAssignmentEvent ev;
        ev.part = walk[pos];
        ev.sector_points = sectors[pos].members;
        out.trace.events.emplace_back(ev);
        IndexList part = chain[pos];
        std::sort(part.begin(), part.end());
        out.partition.parts[walk[pos]] = std::move(part);
    }
    out.partition.validate(ps);
    GraphSpec got = intersection_graph(ps, out.partition);
    if (got.edges != target.edges)
        throw VerificationError("cycle construction: hull graph does not match the target");
    return out;
}

}  // namespace nerveforge
