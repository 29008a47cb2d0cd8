#include "nerveforge/acceptance.h"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <ostream>
#include <random>
#include <sstream>

#include "nerveforge/convex.h"
#include "nerveforge/errors.h"
#include "nerveforge/graph.h"
#include "nerveforge/io.h"
#include "nerveforge/nerve.h"
#include "nerveforge/predicates.h"
#include "nerveforge/randgen.h"
#include "nerveforge/search.h"
#include "nerveforge/treebuild.h"
#include "nerveforge/cyclebuild.h"

namespace nerveforge {

namespace {

uint64_t mix(uint64_t a, uint64_t b, uint64_t c) {
    uint64_t x = a * 0x9e3779b97f4a7c15ULL + b * 0xbf58476d1ce4e5b9ULL + c * 0x94d049bb133111ebULL;
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return x;
}

void need(bool cond, const std::string& msg) {
    if (!cond) throw VerificationError(msg);
}

PointSet with_extras(const PointSet& base, const PointSet& extras) {
    PointSet full = base;
    for (const Point& p : extras.points) full.points.push_back(p);
    return full;
}

void check_realizes(const PointSet& ps, const Partition& part, const GraphSpec& target,
                    const std::string& ctx) {
    GraphSpec got = intersection_graph(ps, part);
    need(got.n == target.n && got.edges == target.edges, ctx + ": wrong labeled graph");
    need(graphs_isomorphic(got, target).has_value(), ctx + ": not isomorphic");
}

// ---- criterion 1 ------------------------------------------------------

void crit_radon() {
    for (int d = 2; d <= 4; ++d) {
        for (int trial = 0; trial < 500; ++trial) {
            PointSet ps = random_points(d + 2, d, mix(1, d, trial), RandomMode::uniform_box);
            RadonPair rp = radon_partition(ps);
            IndexList all = rp.part_a;
            all.insert(all.end(), rp.part_b.begin(), rp.part_b.end());
            std::sort(all.begin(), all.end());
            IndexList expect(d + 2);
            for (int i = 0; i < d + 2; ++i) expect[i] = i;
            need(all == expect, "parts do not partition the index set");
            need(point_in_hull(ps, rp.witness, rp.part_a), "witness misses hull of part a");
            need(point_in_hull(ps, rp.witness, rp.part_b), "witness misses hull of part b");
        }
    }
}

// ---- criterion 2 ------------------------------------------------------

void crit_trees_convex() {
    int total = 0;
    for (int n = 1; n <= 8; ++n) {
        auto trees = all_trees(n);
        total += (int)trees.size();
        for (int ti = 0; ti < (int)trees.size(); ++ti) {
            for (int trial = 0; trial < 20; ++trial) {
                PointSet ps = random_points(2 * n, 2, mix(2, n * 100 + ti, trial),
                                            RandomMode::convex_position);
                PartitionResult res = tree_partition_convex_2d(trees[ti], ps);
                check_realizes(ps, res.partition, trees[ti], "convex tree");
            }
        }
    }
    need(total == 48, "tree census is not 48 classes");
}

// ---- criterion 3 ------------------------------------------------------

void crit_extension_planar() {
    for (int n = 1; n <= 8; ++n) {
        auto trees = all_trees(n);
        for (int ti = 0; ti < (int)trees.size(); ++ti) {
            for (int trial = 0; trial < 20; ++trial) {
                PointSet base = random_points(2 * n, 2, mix(2, n * 100 + ti, trial),
                                              RandomMode::convex_position);
                PartitionResult res = tree_partition_convex_2d(trees[ti], base);
                PointSet extras =
                    random_points(20, 2, mix(3, n * 100 + ti, trial), RandomMode::uniform_box);
                PointSet full = with_extras(base, extras);
                IndexList base_idx(2 * n);
                for (int i = 0; i < 2 * n; ++i) base_idx[i] = i;
                Partition ext = extend_partition_2d(full, base_idx, res);
                need(ext.restricted(base_idx).parts == res.partition.parts,
                     "extension moved a base point");
                need(nerve_complex(full, ext) == nerve_complex(base, res.partition),
                     "extension changed the nerve");
            }
        }
    }
}

// ---- criterion 4 ------------------------------------------------------

void crit_trees_cyclic() {
    for (int n = 1; n <= 5; ++n) {
        auto trees = all_trees(n);
        for (int d = 2; d <= 4; ++d) {
            int m = (n - 1) * (d + 1) + 1;
            for (int ti = 0; ti < (int)trees.size(); ++ti) {
                for (int trial = 0; trial < 5; ++trial) {
                    PointSet ps = random_points(m, d, mix(4, n * 100 + ti, d * 10 + trial),
                                                RandomMode::moment_curve);
                    PartitionResult res = tree_partition_cyclic(trees[ti], ps);
                    check_realizes(ps, res.partition, trees[ti], "cyclic tree");
                    PointSet extras = random_points(20, d, mix(40, n * 100 + ti, d * 10 + trial),
                                                    RandomMode::uniform_box);
                    PointSet full = with_extras(ps, extras);
                    IndexList base_idx(m);
                    for (int i = 0; i < m; ++i) base_idx[i] = i;
                    Partition ext = extend_partition_cyclic(full, base_idx, res);
                    need(ext.restricted(base_idx).parts == res.partition.parts,
                         "cyclic extension moved a base point");
                    need(nerve_complex(full, ext) == nerve_complex(ps, res.partition),
                         "cyclic extension changed the nerve");
                }
            }
        }
    }
}

// ---- criterion 5 ------------------------------------------------------

void crit_caterpillars() {
    int total = 0;
    std::map<std::tuple<int, int, int>, PointSet> cache;
    for (int n = 1; n <= 8; ++n) {
        std::vector<GraphSpec> cats;
        for (auto& t : all_trees(n))
            if (caterpillar_decompose(t)) cats.push_back(t);
        total += (int)cats.size();
        for (int d = 2; d <= 3; ++d) {
            int cnt = (d + 1) * (n - 1) + 1;
            for (auto& cat : cats) {
                for (int trial = 0; trial < 50; ++trial) {
                    auto key = std::make_tuple(cnt, d, trial);
                    auto it = cache.find(key);
                    if (it == cache.end())
                        it = cache
                                 .emplace(key, random_points(cnt, d, mix(5, n * 10 + d, trial),
                                                             RandomMode::uniform_box))
                                 .first;
                    PartitionResult res = caterpillar_partition(cat, it->second);
                    check_realizes(it->second, res.partition, cat, "caterpillar");
                }
            }
        }
    }
    need(total == 44, "caterpillar census is not 44 classes");
}

// ---- criterion 6 ------------------------------------------------------

void crit_stars() {
    for (int n = 1; n <= 6; ++n) {
        GraphSpec star = GraphSpec::star(n);
        for (int trial = 0; trial < 100; ++trial) {
            PointSet ps = random_points(2 * n, 2, mix(6, n, trial), RandomMode::uniform_box);
            PartitionResult res = star_partition_2d(star, ps);
            check_realizes(ps, res.partition, star, "star");
        }
    }
    // one point short never suffices, regardless of the convex-position set
    for (int n = 2; n <= 4; ++n) {
        GraphSpec star = GraphSpec::star(n);
        for (int trial = 0; trial < 3; ++trial) {
            PointSet ps =
                random_points(2 * n - 1, 2, mix(60, n, trial), RandomMode::convex_position);
            SearchOptions opt;
            opt.prune = false;
            SearchResult r = is_partition_induced(ps, star, opt);
            need(!r.found(), "star found on 2n-1 points");
            need(r.stats.leaves == stirling2(2 * n - 1, n), "scan was not exhaustive");
        }
    }
}

// ---- criterion 7 ------------------------------------------------------

void crit_cycles() {
    for (int n = 4; n <= 6; ++n) {
        GraphSpec cyc = GraphSpec::cycle(n);
        for (int d = 2; d <= 3; ++d) {
            int count = n * d + n + 4 * d;
            for (int trial = 0; trial < 50; ++trial) {
                PointSet ps =
                    random_points(count, d, mix(7, n * 10 + d, trial), RandomMode::uniform_box);
                PartitionResult res = cycle_partition(cyc, ps, mix(70, n * 10 + d, trial));
                check_realizes(ps, res.partition, cyc, "cycle");
            }
        }
    }
}

// ---- criteria 8 and 9 -------------------------------------------------

uint64_t stirling_recurrence(int n, int k) {
    std::vector<std::vector<uint64_t>> s(n + 1, std::vector<uint64_t>(k + 1, 0));
    s[0][0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= std::min(i, k); ++j) s[i][j] = j * s[i - 1][j] + s[i - 1][j - 1];
    return s[n][k];
}

void blocker_case(const std::string& config, const GraphSpec& target, uint64_t expect_leaves) {
    BuiltinConfig cfg = builtin_config(config);
    need(stirling_recurrence(cfg.points.size(), target.n) == expect_leaves,
         "partition-count oracle disagrees");
    need(stirling2(cfg.points.size(), target.n) == expect_leaves, "library count disagrees");
    SearchOptions off;
    off.prune = false;
    SearchResult full = is_partition_induced(cfg.points, target, off);
    need(!full.found(), "blocker admits the target graph");
    need(full.stats.leaves == expect_leaves, "scan did not visit every partition");
    SearchResult pruned = is_partition_induced(cfg.points, target);
    need(!pruned.found(), "pruned scan disagrees with the full scan");
}

void crit_blocker_p4() { blocker_case("p4-blocker-8", GraphSpec::path(4), 1701); }

void crit_blocker_c4() { blocker_case("c4-blocker-10", GraphSpec::cycle(4), 34105); }

// ---- criterion 10 -----------------------------------------------------

void crit_nine_points() {
    GraphSpec p4 = GraphSpec::path(4);
    for (int trial = 0; trial < 500; ++trial) {
        PointSet ps = random_points(9, 2, mix(10, 0, trial), RandomMode::uniform_box);
        SearchResult r = is_partition_induced(ps, p4);
        need(r.found(), "no path-of-four partition on nine points, trial " + std::to_string(trial));
    }
}

// ---- criterion 11 -----------------------------------------------------

void crit_invariance() {
    for (int trial = 0; trial < 200; ++trial) {
        int d = 2 + (trial % 2);
        int k = 3 + (trial % 3);
        PointSet ps = random_points(10, d, mix(11, 1, trial), RandomMode::uniform_box);
        std::mt19937_64 rng(mix(11, 2, trial));
        Partition part;
        part.point_count = ps.size();
        part.parts.assign(k, {});
        for (int i = 0; i < ps.size(); ++i) part.parts[rng() % k].push_back(i);
        for (int j = 0; j < k; ++j) {
            if (!part.parts[j].empty()) continue;
            for (int o = 0; o < k; ++o) {
                if ((int)part.parts[o].size() > 1) {
                    part.parts[j].push_back(part.parts[o].back());
                    part.parts[o].pop_back();
                    break;
                }
            }
        }
        part.validate(ps);
        AffineMap map = random_unimodular_map(d, mix(11, 3, trial));
        PointSet qs = map.apply(ps);
        need(chirotope(ps) == chirotope(qs), "affine map changed the chirotope");
        need(intersection_graph(ps, part).edges == intersection_graph(qs, part).edges,
             "affine map changed the intersection graph");
    }
}

// ---- criterion 12 -----------------------------------------------------

void crit_fixture() {
    auto planar = [](std::initializer_list<std::pair<long, long>> coords) {
        PointSet ps;
        ps.dim = 2;
        for (auto& [x, y] : coords) ps.points.push_back({Rat(x), Rat(y)});
        return ps;
    };
    // two 9-point sets differing only in point 0; derived by integer grid
    // search inside one order-type cell
    PointSet with_center = planar({{8, 47}, {100, 45}, {50, 10}, {75, 0}, {25, 80},
                                   {76, 55}, {25, 0}, {75, 80}, {24, 55}});
    PointSet without_center = planar({{-7, 33}, {100, 45}, {50, 10}, {75, 0}, {25, 80},
                                      {76, 55}, {25, 0}, {75, 80}, {24, 55}});
    Partition part;
    part.point_count = 9;
    part.parts = {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}};

    need(in_general_position(with_center), "first fixture set is degenerate");
    need(in_general_position(without_center), "second fixture set is degenerate");
    need(chirotope(with_center) == chirotope(without_center), "fixture chirotopes differ");

    GraphSpec g1 = intersection_graph(with_center, part);
    GraphSpec g2 = intersection_graph(without_center, part);
    need(g1.edges == g2.edges, "fixture skeletons differ");
    need((int)g1.edges.size() == 3, "fixture skeleton is not a triangle");

    need(common_point(with_center, {part.parts[0], part.parts[1], part.parts[2]}).has_value(),
         "first fixture set lost its common point");
    need(!common_point(without_center, {part.parts[0], part.parts[1], part.parts[2]}).has_value(),
         "second fixture set gained a common point");
    NerveComplex n1 = nerve_complex(with_center, part);
    NerveComplex n2 = nerve_complex(without_center, part);
    need(n1.faces_of_size(3).size() == 1, "first fixture set must have one triple face");
    need(n2.faces_of_size(3).empty(), "second fixture set must have no triple face");
}

}  // namespace

int run_acceptance(std::ostream& out) {
    struct Crit {
        const char* name;
        void (*fn)();
    };
    const Crit crits[] = {
        {"radon-witness", crit_radon},
        {"tree-on-convex-polygon", crit_trees_convex},
        {"planar-extension", crit_extension_planar},
        {"cyclic-trees-and-extension", crit_trees_cyclic},
        {"caterpillar-tight-count", crit_caterpillars},
        {"star-exact-count", crit_stars},
        {"cycle-bound", crit_cycles},
        {"path4-blocker-8", crit_blocker_p4},
        {"cycle4-blocker-10", crit_blocker_c4},
        {"nine-point-path4-search", crit_nine_points},
        {"order-type-invariance", crit_invariance},
        {"skeleton-vs-higher-faces", crit_fixture},
    };
    int failed = 0;
    int idx = 0;
    for (const Crit& c : crits) {
        ++idx;
        auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = true;
        try {
            c.fn();
        } catch (const std::exception& e) {
            ok = false;
            detail = e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ostringstream line;
        line << (ok ? "PASS" : "FAIL") << " " << idx << " " << c.name;
        char buf[32];
        std::snprintf(buf, sizeof buf, " (%.1fs)", secs);
        line << buf;
        if (!ok) {
            line << " - " << detail;
            ++failed;
        }
        out << line.str() << "\n";
        out.flush();
    }
    out << (failed == 0 ? "ALL CRITERIA PASS" : std::to_string(failed) + " CRITERIA FAILED")
        << "\n";
    return failed;
}

}  // namespace nerveforge
