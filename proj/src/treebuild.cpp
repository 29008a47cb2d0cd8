#include "nerveforge/treebuild.h"

#include <algorithm>
#include <map>
#include <set>

#include "nerveforge/errors.h"
#include "nerveforge/nerve.h"
#include "nerveforge/predicates.h"
#include "nerveforge/subsetfind.h"

namespace nerveforge {

namespace {

void verify_induced(const PointSet& ps, const Partition& part, const GraphSpec& target,
                    const char* what) {
    GraphSpec got = intersection_graph(ps, part);
    if (got.edges != target.edges)
        throw VerificationError(std::string(what) + ": hull graph does not match the target");
}

// ---- convex position construction ----------------------------------------

struct ConvexLocal {
    std::vector<int> color;  // physical polygon slot -> tree vertex
    struct Ev {
        int level;
        int leaf, parent;
        int slot_a, slot_b, slot_anchor;
    };
    std::vector<Ev> events;
};

// Builds the coloring for the first j vertices in BFS order over 2j slots.
// Slot 0 is the anchor; the pair split off at this level sits on slots 1 and
// 2j-1, whose chord cuts the anchor off from everything else.
ConvexLocal build_convex(int j, const TreeOrder& ord) {
    if (j == 1) {
        ConvexLocal base;
        base.color = {ord.order[0], ord.order[0]};
        return base;
    }
    int v = ord.order[j - 1];
    int r = ord.parent[v];
    ConvexLocal sub = build_convex(j - 1, ord);
    int sub_len = 2 * (j - 1);
    if (sub.color[0] != r) {
        int t = 0;
        while (sub.color[t] != r) ++t;
        // rotating a coloring around the polygon preserves its hull graph
        std::vector<int> rot(sub_len);
        for (int s = 0; s < sub_len; ++s) rot[s] = sub.color[(s + t) % sub_len];
        sub.color = std::move(rot);
        for (auto& e : sub.events) {
            e.slot_a = (e.slot_a - t % sub_len + sub_len) % sub_len;
            e.slot_b = (e.slot_b - t % sub_len + sub_len) % sub_len;
            e.slot_anchor = (e.slot_anchor - t % sub_len + sub_len) % sub_len;
        }
    }
    ConvexLocal out;
    out.color.assign(2 * j, -1);
    out.color[0] = sub.color[0];
    out.color[1] = v;
    out.color[2 * j - 1] = v;
    for (int s = 1; s < sub_len; ++s) out.color[s + 1] = sub.color[s];
    auto lift = [](int slot) { return slot == 0 ? 0 : slot + 1; };
    for (auto e : sub.events) {
        e.slot_a = lift(e.slot_a);
        e.slot_b = lift(e.slot_b);
        e.slot_anchor = lift(e.slot_anchor);
        out.events.push_back(e);
    }
    out.events.push_back({j, v, r, 1, 2 * j - 1, 0});
    return out;
}

}  // namespace

PartitionResult tree_partition_convex_2d(const GraphSpec& tree, const PointSet& ps) {
    ps.validate();
    if (!tree.is_tree()) throw NotATreeError("target graph is not a tree");
    if (ps.dim != 2) throw DimensionError("convex construction works in the plane");
    int n = tree.n;
    if (ps.size() != 2 * n) throw WrongCountError("need exactly 2n points");
    if (!convex_position_2d(ps)) throw NotConvexPositionError("points are not in convex position");

    TreeOrder ord = bfs_tree_order(tree);
    ConvexLocal local = build_convex(n, ord);
    IndexList ring = hull_ccw_2d(ps);  // ccw from the lex-min point

    PartitionResult out;
    out.partition.point_count = ps.size();
    out.partition.parts.resize(n);
    for (int s = 0; s < 2 * n; ++s) out.partition.parts[local.color[s]].push_back(ring[s]);
    for (auto& part : out.partition.parts) std::sort(part.begin(), part.end());

    for (auto& e : local.events) {
        LeafLineEvent ev;
        ev.level = e.level;
        ev.leaf_part = e.leaf;
        ev.parent_part = e.parent;
        Index pa = ring[e.slot_a], pb = ring[e.slot_b], anchor = ring[e.slot_anchor];
        ev.pair_low = std::min(pa, pb);
        ev.pair_high = std::max(pa, pb);
        ev.boundary = line_through(ps[pa], ps[pb]);
        int side = ev.boundary.side(ps[anchor]);
        if (side == 0) throw DegeneracyError("anchor on its own chord");
        if (side < 0) {
            for (auto& c : ev.boundary.normal) c = -c;
            ev.boundary.offset = -ev.boundary.offset;
        }
        out.trace.events.emplace_back(ev);
    }
    verify_induced(ps, out.partition, tree, "convex construction");
    return out;
}

namespace {

// shared plumbing for both replays
struct ReplayBase {
    Partition full;
    std::vector<char> is_base;
    int root_part = -1;
};

ReplayBase remap_base(const PointSet& ps, const IndexList& base, const Partition& built,
                      const std::vector<int>& leaf_parts) {
    if ((int)base.size() != built.point_count)
        throw SupersetMismatchError("base index list does not match the built partition");
    ReplayBase rb;
    rb.is_base.assign(ps.size(), 0);
    for (Index g : base) {
        if (g < 0 || g >= ps.size()) throw SupersetMismatchError("base index out of range");
        if (rb.is_base[g]++) throw SupersetMismatchError("duplicate base index");
    }
    rb.full.point_count = ps.size();
    rb.full.parts.resize(built.parts.size());
    for (int j = 0; j < (int)built.parts.size(); ++j)
        for (Index local : built.parts[j]) rb.full.parts[j].push_back(base[local]);

    std::set<int> leaves(leaf_parts.begin(), leaf_parts.end());
    if (leaves.size() != leaf_parts.size() ||
        (int)leaf_parts.size() + 1 != (int)built.parts.size())
        throw MissingTraceError("trace does not cover every non-root part once");
    for (int j = 0; j < (int)built.parts.size(); ++j)
        if (!leaves.count(j)) rb.root_part = j;
    return rb;
}

}  // namespace

Partition extend_partition_2d(const PointSet& ps, const IndexList& base,
                              const PartitionResult& built) {
    ps.validate();
    if (ps.dim != 2) throw DimensionError("planar replay needs planar points");
    auto events = built.trace.of_kind<LeafLineEvent>();
    if (events.empty() && built.partition.parts.size() > 1)
        throw MissingTraceError("no leaf line events recorded");
    std::sort(events.begin(), events.end(),
              [](const LeafLineEvent& a, const LeafLineEvent& b) { return a.level > b.level; });
    std::vector<int> leaf_parts;
    for (auto& e : events) leaf_parts.push_back(e.leaf_part);
    ReplayBase rb = remap_base(ps, base, built.partition, leaf_parts);

    for (int g = 0; g < ps.size(); ++g) {
        if (rb.is_base[g]) continue;
        int target = rb.root_part;
        for (auto& e : events) {
            if (point_in_hull(ps, ps[g], rb.full.parts[e.parent_part])) {
                target = e.parent_part;
                break;
            }
            if (e.boundary.side(ps[g]) >= 0) {  // closed anchor side
                target = e.leaf_part;
                break;
            }
        }
        rb.full.parts[target].push_back(g);
    }
    for (auto& part : rb.full.parts) std::sort(part.begin(), part.end());
    rb.full.validate(ps);

    PointSet base_ps = ps.subset(base);
    GraphSpec before = intersection_graph(base_ps, built.partition);
    verify_induced(ps, rb.full, before, "planar replay");
    return rb.full;
}

PartitionResult tree_partition_cyclic(const GraphSpec& tree, const PointSet& ps) {
    ps.validate();
    if (!tree.is_tree()) throw NotATreeError("target graph is not a tree");
    int d = ps.dim;
    if (d < 2) throw DimensionError("cyclic construction needs dimension >= 2");
    int n = tree.n;
    int m = (n - 1) * (d + 1) + 1;
    if (ps.size() != m) throw WrongCountError("need exactly (n-1)(d+1)+1 points");
    Chirotope chi = chirotope(ps);
    if (chi.has_zero()) throw NotGeneralPositionError("degenerate tuple in input");
    if (!chi.all_positive())
        throw NotAlternatingError("orientation signs are not uniformly positive in index order");

    PartitionResult out;
    out.partition.point_count = m;
    out.partition.parts.resize(n);
    TreeOrder ord = bfs_tree_order(tree);
    if (n == 1) {
        out.partition.parts[ord.order[0]].push_back(0);
        return out;
    }

    // slots hold (color, uid); insertions keep relative order, so uid order
    // within a level's block equals final index order
    std::vector<std::pair<int, int>> slots{{ord.order[0], 0}};
    int next_uid = 1;
    struct LevelRec {
        int level, part_q, part_r;
        int shared_uid;
        std::vector<int> before_uids;  // everything present before the insert
        std::vector<int> block_uids;   // shared + the d+1 new, in rank order
    };
    std::vector<LevelRec> recs;
    for (int j = 2; j <= n; ++j) {
        int v = ord.order[j - 1];
        int r = ord.parent[v];
        int k = -1;
        for (int s = 0; s < (int)slots.size(); ++s)
            if (slots[s].first == r) k = s;
        if (k < 0) throw Error("parent color missing from the sequence");
        LevelRec rec;
        rec.level = j;
        rec.part_q = r;
        rec.part_r = v;
        rec.shared_uid = slots[k].second;
        for (auto& s : slots) rec.before_uids.push_back(s.second);
        rec.block_uids.push_back(slots[k].second);
        std::vector<std::pair<int, int>> fresh;
        for (int i = 1; i <= d + 1; ++i) {
            int color = (i % 2 == 0) ? r : v;
            fresh.emplace_back(color, next_uid);
            rec.block_uids.push_back(next_uid);
            ++next_uid;
        }
        slots.insert(slots.begin() + k + 1, fresh.begin(), fresh.end());
        recs.push_back(std::move(rec));
    }
    if ((int)slots.size() != m) throw Error("slot count mismatch");
    std::vector<int> uid_final(next_uid, -1);
    for (int idx = 0; idx < m; ++idx) {
        uid_final[slots[idx].second] = idx;
        out.partition.parts[slots[idx].first].push_back(idx);
    }

    for (auto& rec : recs) {
        IndexList block;
        for (int uid : rec.block_uids) block.push_back(uid_final[uid]);
        // points in uniform positive position split alternately in order
        IndexList expect_a, expect_b;
        for (size_t rank = 0; rank < block.size(); ++rank)
            (rank % 2 == 0 ? expect_a : expect_b).push_back(block[rank]);
        RadonPair split = radon_split(ps, block);
        IndexList got_a = split.part_a, got_b = split.part_b;
        std::sort(got_a.begin(), got_a.end());
        std::sort(got_b.begin(), got_b.end());
        IndexList sa = expect_a, sb = expect_b;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (got_a != sa || got_b != sb)
            throw NotAlternatingError("radon split does not alternate along the block");

        RadonStepEvent rs;
        rs.level = rec.level;
        rs.part_a = rec.part_q;
        rs.part_b = rec.part_r;
        rs.simplex = block;
        rs.side_a = expect_a;
        rs.side_b = expect_b;

        SubpolytopeSplitEvent sp;
        sp.level = rec.level;
        sp.part_q = rec.part_q;
        sp.part_r = rec.part_r;
        sp.shared = uid_final[rec.shared_uid];
        for (int uid : rec.before_uids)
            if (uid != rec.shared_uid) sp.q_side.push_back(uid_final[uid]);
        for (size_t rank = 1; rank < rec.block_uids.size(); ++rank)
            sp.r_side.push_back(uid_final[rec.block_uids[rank]]);
        std::sort(sp.q_side.begin(), sp.q_side.end());
        std::sort(sp.r_side.begin(), sp.r_side.end());

        // the block went into the open slot gap (shared, succ); in final index
        // order the gap holds the block and every later insertion into it, and
        // those stay separable from the rest for any uniformly positive set
        int lo = sp.shared, hi = m;
        for (Index f : sp.q_side)
            if (f > lo && f < hi) hi = f;
        IndexList inside, outside;
        for (int idx = 0; idx < m; ++idx)
            (idx > lo && idx < hi ? inside : outside).push_back(idx);
        HullCertificate cert = hulls_intersect(ps, inside, outside);
        if (cert.intersects)
            throw SeparationFailureError("insertion gap meets the remaining points");
        sp.boundary = *cert.separator;  // A side negative, so the gap is negative
        out.trace.events.emplace_back(sp);
        out.trace.events.emplace_back(rs);
    }
    for (auto& part : out.partition.parts) std::sort(part.begin(), part.end());
    verify_induced(ps, out.partition, tree, "cyclic construction");
    return out;
}

Partition extend_partition_cyclic(const PointSet& ps, const IndexList& base,
                                  const PartitionResult& built) {
    ps.validate();
    auto events = built.trace.of_kind<SubpolytopeSplitEvent>();
    if (events.empty() && built.partition.parts.size() > 1)
        throw MissingTraceError("no split events recorded");
    std::vector<int> leaf_parts;
    for (auto& e : events) leaf_parts.push_back(e.part_r);
    ReplayBase rb = remap_base(ps, base, built.partition, leaf_parts);

    int m = built.partition.point_count;
    int n_parts = built.partition.part_count();
    PointSet base_ps = ps.subset(base);
    GraphSpec before = intersection_graph(base_ps, built.partition);
    std::vector<std::vector<char>> adj(n_parts, std::vector<char>(n_parts, 0));
    for (auto& [u, v] : before.edges) adj[u][v] = adj[v][u] = 1;

    // the recorded gaps form a laminar family of open intervals over base
    // positions; a gap's boundary has the gap contents strictly negative and
    // everything else strictly positive
    struct Gap {
        int lo, hi;
        Hyperplane boundary;
        int parent = -1;
        IndexList native;  // parts fully inside this gap but no child gap
    };
    std::vector<Gap> gaps;
    for (auto& e : events) {
        Gap gp;
        gp.lo = e.shared;
        gp.hi = m;
        for (Index f : e.q_side)
            if (f > gp.lo && f < gp.hi) gp.hi = f;
        gp.boundary = e.boundary;
        gaps.push_back(std::move(gp));
    }
    auto covers = [&](int a, int b) {
        return gaps[a].lo <= gaps[b].lo && gaps[b].hi <= gaps[a].hi &&
               gaps[a].hi - gaps[a].lo > gaps[b].hi - gaps[b].lo;
    };
    for (int b = 0; b < (int)gaps.size(); ++b)
        for (int a = 0; a < (int)gaps.size(); ++a)
            if (covers(a, b) && (gaps[b].parent < 0 || covers(gaps[b].parent, a)))
                gaps[b].parent = a;

    IndexList root_native;
    for (int p = 0; p < n_parts; ++p) {
        int mg = -1;
        for (int a = 0; a < (int)gaps.size(); ++a) {
            bool all = true;
            for (Index x : built.partition.parts[p])
                all = all && gaps[a].lo < x && x < gaps[a].hi;
            if (all && (mg < 0 || covers(mg, a))) mg = a;
        }
        (mg < 0 ? root_native : gaps[mg].native).push_back(p);
    }

    for (int g = 0; g < ps.size(); ++g) {
        if (rb.is_base[g]) continue;
        int target = -1;
        for (int p = 0; p < n_parts && target < 0; ++p)
            if (point_in_hull(ps, ps[g], rb.full.parts[p])) target = p;
        if (target < 0) {
            // descend to the innermost gap whose negative side holds the point
            int cur = -1;
            for (bool moved = true; moved;) {
                moved = false;
                for (int a = 0; a < (int)gaps.size() && !moved; ++a)
                    if (gaps[a].parent == cur && gaps[a].boundary.side(ps[g]) < 0) {
                        cur = a;
                        moved = true;
                    }
            }
            IndexList order;
            std::vector<char> listed(n_parts, 0);
            for (int a = cur; a >= 0; a = gaps[a].parent)
                for (Index p : gaps[a].native) listed[p] = 1, order.push_back(p);
            for (Index p : root_native) listed[p] = 1, order.push_back(p);
            for (int p = 0; p < n_parts; ++p)
                if (!listed[p]) order.push_back(p);
            for (Index p : order) {
                IndexList probe = rb.full.parts[p];
                probe.push_back(g);
                bool clean = true;
                for (int w = 0; w < n_parts && clean; ++w) {
                    if (w == p || adj[p][w]) continue;
                    clean = !hulls_intersect(ps, probe, rb.full.parts[w]).intersects;
                }
                if (clean) {
                    target = p;
                    break;
                }
            }
        }
        if (target < 0)
            throw SeparationFailureError("no part takes the point without a new intersection");
        rb.full.parts[target].push_back(g);
    }
    for (auto& part : rb.full.parts) std::sort(part.begin(), part.end());
    rb.full.validate(ps);
    verify_induced(ps, rb.full, before, "cyclic replay");
    return rb.full;
}

PartitionResult caterpillar_partition(const GraphSpec& tree, const PointSet& ps) {
    ps.validate();
    if (!tree.is_tree()) throw NotATreeError("target graph is not a tree");
    auto shape_opt = caterpillar_decompose(tree);
    if (!shape_opt) throw NotCaterpillarError("tree has an off-spine vertex of degree > 1");
    CaterpillarShape shape = *shape_opt;
    if (shape.spine.front() > shape.spine.back()) {
        std::reverse(shape.spine.begin(), shape.spine.end());
        std::reverse(shape.leaves.begin(), shape.leaves.end());
    }
    int d = ps.dim;
    int n = tree.n;
    int need = (d + 1) * (n - 1) + 1;
    if (ps.size() < need) throw TooFewPointsError("need at least (d+1)(n-1)+1 points");
    for (int i = 0; i < ps.size(); ++i)
        for (int j = i + 1; j < ps.size(); ++j)
            if (points_equal(ps[i], ps[j])) throw DegeneracyError("duplicate point");

    // generic functional: x_1 + e x_2 + e^2 x_3 + ... with e = 1/q; only
    // finitely many q collide on a fixed finite point set
    std::vector<Rat> fval(ps.size());
    bool distinct = false;
    for (int q = 1; q <= 512 && !distinct; ++q) {
        Rat e = Rat(1) / Rat(q);
        for (int i = 0; i < ps.size(); ++i) {
            Rat acc = 0, w = 1;
            for (int c = 0; c < d; ++c) {
                acc += w * ps[i][c];
                w *= e;
            }
            fval[i] = acc;
        }
        std::vector<Rat> sorted = fval;
        std::sort(sorted.begin(), sorted.end());
        distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    }
    if (!distinct) throw DegeneracyError("no generic functional found");

    IndexList order(ps.size());
    for (int i = 0; i < ps.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](Index a, Index b) { return fval[a] < fval[b]; });

    // processing order: spine vertex, then its leaves, then the next spine vertex
    std::vector<std::pair<int, int>> todo;  // (vertex, attach vertex)
    for (size_t s = 0; s < shape.spine.size(); ++s) {
        int u = shape.spine[s];
        todo.emplace_back(u, s == 0 ? -1 : shape.spine[s - 1]);
        IndexList leaves = shape.leaves[s];
        std::sort(leaves.begin(), leaves.end());
        for (int l : leaves) todo.emplace_back(l, u);
    }

    PartitionResult out;
    out.partition.point_count = ps.size();
    out.partition.parts.resize(n);
    out.partition.parts[todo[0].first].push_back(order[0]);
    int cursor = 1;
    for (size_t step = 1; step < todo.size(); ++step) {
        auto [w, attach] = todo[step];
        IndexList& target = out.partition.parts[attach];
        Index x = target[0];
        for (Index i : target)
            if (fval[i] > fval[x]) x = i;
        IndexList simplex{x};
        for (int t = 0; t < d + 1; ++t) simplex.push_back(order[cursor++]);
        RadonPair split = radon_split(ps, simplex);
        bool x_in_a = std::find(split.part_a.begin(), split.part_a.end(), x) != split.part_a.end();
        const IndexList& with_x = x_in_a ? split.part_a : split.part_b;
        const IndexList& other = x_in_a ? split.part_b : split.part_a;
        for (Index i : with_x)
            if (i != x) target.push_back(i);
        for (Index i : other) out.partition.parts[w].push_back(i);

        RadonStepEvent rs;
        rs.level = (int)step;
        rs.part_a = attach;
        rs.part_b = w;
        rs.simplex = simplex;
        rs.side_a = with_x;
        rs.side_b = other;
        out.trace.events.emplace_back(rs);
    }
    while (cursor < ps.size()) out.partition.parts[shape.spine.back()].push_back(order[cursor++]);
    for (auto& part : out.partition.parts) std::sort(part.begin(), part.end());
    verify_induced(ps, out.partition, tree, "caterpillar construction");
    return out;
}

namespace {

std::vector<std::pair<Index, Index>> pair_greedy(const PointSet& ps, IndexList a, IndexList b,
                                                 IndexList* leftovers) {
    std::vector<std::pair<Index, Index>> pairs;
    auto in = [](const IndexList& v, Index x) {
        return std::find(v.begin(), v.end(), x) != v.end();
    };
    while (!a.empty() && !b.empty()) {
        IndexList all = a;
        all.insert(all.end(), b.begin(), b.end());
        std::pair<Index, Index> best{-1, -1};
        if (all.size() == 2) {
            best = {a[0], b[0]};
        } else {
            IndexList ring = hull_ccw_2d(ps, all);
            for (size_t t = 0; t < ring.size(); ++t) {
                Index u = ring[t], v = ring[(t + 1) % ring.size()];
                bool ua = in(a, u), va = in(a, v);
                if (ua == va) continue;
                Index lo = std::min(u, v), hi = std::max(u, v);
                if (best.first < 0 || std::make_pair(lo, hi) <
                                          std::make_pair(std::min(best.first, best.second),
                                                         std::max(best.first, best.second))) {
                    best = ua ? std::make_pair(u, v) : std::make_pair(v, u);
                }
            }
            if (best.first < 0) throw Error("no crossing hull edge found");
        }
        pairs.push_back(best);
        a.erase(std::find(a.begin(), a.end(), best.first));
        b.erase(std::find(b.begin(), b.end(), best.second));
    }
    if (leftovers) {
        *leftovers = a;
        leftovers->insert(leftovers->end(), b.begin(), b.end());
    }
    return pairs;
}

}  // namespace

std::vector<std::pair<Index, Index>> pair_across_line(const PointSet& ps, const IndexList& a,
                                                      const IndexList& b,
                                                      const Hyperplane& line) {
    if (a.size() != b.size()) throw WrongCountError("sides must have equal size");
    for (Index i : a)
        if (line.side(ps[i]) >= 0) throw PreconditionError("side a must be strictly negative");
    for (Index i : b)
        if (line.side(ps[i]) <= 0) throw PreconditionError("side b must be strictly positive");
    return pair_greedy(ps, a, b, nullptr);
}

PartitionResult star_partition_2d(const GraphSpec& star, const PointSet& ps) {
    ps.validate();
    if (ps.dim != 2) throw DimensionError("star construction works in the plane");
    if (!star.is_tree()) throw NotATreeError("target graph is not a tree");
    int n = star.n;
    int center = 0;
    if (n > 2) {
        auto deg = star.degrees();
        center = -1;
        for (int v = 0; v < n; ++v)
            if (deg[v] == n - 1) center = v;
        if (center < 0) throw PreconditionError("target graph is not a star");
        for (int v = 0; v < n; ++v)
            if (v != center && deg[v] != 1) throw PreconditionError("target graph is not a star");
    }
    if (ps.size() != 2 * n) throw WrongCountError("need exactly 2n points");
    if (!in_general_position(ps)) throw NotGeneralPositionError("points are not in general position");

    PartitionResult out;
    out.partition.point_count = ps.size();
    out.partition.parts.resize(n);
    IndexList leaf_ids;
    for (int v = 0; v < n; ++v)
        if (v != center) leaf_ids.push_back(v);
    if (n == 1) {
        out.partition.parts[0] = {0, 1};
        verify_induced(ps, out.partition, star, "star construction");
        return out;
    }

    IndexList ring = hull_ccw_2d(ps);
    Index p1 = ring[0];
    int hullsz = (int)ring.size();

    auto sides_of = [&](Index hv, IndexList& left, IndexList& right) {
        Hyperplane line = line_through(ps[p1], ps[hv]);
        left.clear();
        right.clear();
        for (int i = 0; i < ps.size(); ++i) {
            if (i == p1 || i == hv) continue;
            int s = line.side(ps[i]);
            if (s == 0) throw NotGeneralPositionError("third point on a spoke");
            (s > 0 ? left : right).push_back(i);
        }
    };

    // chord case: some spoke has n-1 points on each side
    for (int t = 1; t < hullsz; ++t) {
        IndexList left, right;
        sides_of(ring[t], left, right);
        if ((int)left.size() != n - 1) continue;
        out.partition.parts[center] = {std::min(p1, ring[t]), std::max(p1, ring[t])};
        auto pairs = pair_across_line(ps, right, left, line_through(ps[p1], ps[ring[t]]));
        for (size_t i = 0; i < pairs.size(); ++i) {
            out.partition.parts[leaf_ids[i]] = {std::min(pairs[i].first, pairs[i].second),
                                                std::max(pairs[i].first, pairs[i].second)};
        }
        for (auto& part : out.partition.parts) std::sort(part.begin(), part.end());
        verify_induced(ps, out.partition, star, "star construction");
        return out;
    }

    // wedge case: counts flip between consecutive hull spokes
    for (int t = 1; t + 1 < hullsz; ++t) {
        IndexList l1, r1, l2, r2;
        sides_of(ring[t], l1, r1);
        sides_of(ring[t + 1], l2, r2);
        if (!((int)l1.size() > (int)r1.size() && (int)l2.size() < (int)r2.size())) continue;

        Index hi = ring[t], hj = ring[t + 1];
        std::set<int> dset{p1, hi, hj};
        IndexList tri{p1, hi, hj};
        IndexList outside_b = l2;  // beyond the later spoke
        IndexList outside_c = r1;  // before the earlier spoke
        IndexList wedge;
        std::set<int> outs(outside_b.begin(), outside_b.end());
        outs.insert(outside_c.begin(), outside_c.end());
        for (int i = 0; i < ps.size(); ++i) {
            if (dset.count(i) || outs.count(i)) continue;
            if (!point_in_hull(ps, ps[i], tri)) throw Error("wedge point escapes the triangle");
            wedge.push_back(i);
        }
        IndexList leftovers;
        auto pairs = pair_greedy(ps, outside_c, outside_b, &leftovers);
        int p = (int)pairs.size();
        int singles = n - 1 - p;
        if (singles < 0 || singles > (int)wedge.size())
            throw Error("part count bookkeeping failed");
        IndexList center_pts = tri;
        center_pts.insert(center_pts.end(), leftovers.begin(), leftovers.end());
        for (int i = singles; i < (int)wedge.size(); ++i) center_pts.push_back(wedge[i]);
        out.partition.parts[center] = center_pts;
        int leaf_at = 0;
        for (auto& pr : pairs)
            out.partition.parts[leaf_ids[leaf_at++]] = {std::min(pr.first, pr.second),
                                                        std::max(pr.first, pr.second)};
        for (int i = 0; i < singles; ++i)
            out.partition.parts[leaf_ids[leaf_at++]] = {wedge[i]};
        for (auto& part : out.partition.parts) std::sort(part.begin(), part.end());
        verify_induced(ps, out.partition, star, "star construction");
        return out;
    }
    throw Error("no chord or wedge configuration found");
}

PipelineResult tverberg_tree_pipeline(const PointSet& ps, const GraphSpec& tree,
                                      uint64_t subset_budget) {
    ps.validate();
    if (!tree.is_tree()) throw NotATreeError("target graph is not a tree");
    int n = tree.n;
    int d = ps.dim;
    PipelineResult out;
    if (caterpillar_decompose(tree) && ps.size() >= (d + 1) * (n - 1) + 1) {
        PartitionResult pr = caterpillar_partition(tree, ps);
        out.partition = std::move(pr.partition);
        out.trace = std::move(pr.trace);
        out.route = "caterpillar";
        return out;
    }
    if (d == 2) {
        int want = 2 * n;
        IndexList base;
        try {
            base = find_convex_subset_2d(ps, want, subset_budget);
        } catch (const NotFoundError&) {
            throw SubsetNotFoundError("no convex subset of the needed size", want);
        }
        PartitionResult built = tree_partition_convex_2d(tree, ps.subset(base));
        out.partition = extend_partition_2d(ps, base, built);
        out.trace = std::move(built.trace);
        out.base_subset = base;
        out.route = "convex-subset";
        return out;
    }
    int want = (n - 1) * (d + 1) + 1;
    IndexList base;
    try {
        base = find_cyclic_subpolytope(ps, want, subset_budget);
    } catch (const NotFoundError&) {
        throw SubsetNotFoundError("no cyclic subset of the needed size", want);
    }
    PartitionResult built = tree_partition_cyclic(tree, ps.subset(base));
    out.partition = extend_partition_cyclic(ps, base, built);
    out.trace = std::move(built.trace);
    out.base_subset = base;
    out.route = "cyclic-subset";
    return out;
}

}  // namespace nerveforge
