#include "nerveforge/search.h"

#include <algorithm>
#include <atomic>
#include <limits>
#include <unordered_map>
#include <unordered_set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "nerveforge/errors.h"
#include "nerveforge/nerve.h"

namespace nerveforge {

uint64_t stirling2(int n, int k) {
    if (k < 0 || n < 0) throw PreconditionError("stirling2 needs nonnegative arguments");
    if (k > n) return 0;
    if (n == 0) return 1;  // k == 0 here
    if (k == 0) return 0;
    constexpr uint64_t cap = std::numeric_limits<uint64_t>::max();
    std::vector<uint64_t> row(k + 1, 0);
    row[0] = 1;  // S(0,0)
    for (int i = 1; i <= n; ++i) {
        for (int j = std::min(i, k); j >= 1; --j) {
            uint64_t a = row[j];  // S(i-1, j)
            uint64_t b = row[j - 1];
            uint64_t scaled = (a > cap / (uint64_t)j) ? cap : a * (uint64_t)j;
            row[j] = (scaled > cap - b) ? cap : scaled + b;
        }
        row[0] = 0;
    }
    return row[k];
}

namespace {

struct PairHash {
    size_t operator()(const std::pair<uint64_t, uint64_t>& p) const {
        uint64_t h = p.first * 0x9e3779b97f4a7c15ull;
        h ^= p.second + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return (size_t)h;
    }
};

// Memoized hull-overlap test on point-index bitmasks. Hulls only grow when a
// block gains a point, so an edge once present stays present down the tree.
struct HullCache {
    const PointSet* ps = nullptr;
    std::unordered_map<std::pair<uint64_t, uint64_t>, bool, PairHash> map;
    uint64_t queries = 0, hits = 0;

    bool overlap(uint64_t a, uint64_t b) {
        if (a > b) std::swap(a, b);
        auto it = map.find({a, b});
        if (it != map.end()) {
            ++hits;
            return it->second;
        }
        ++queries;
        IndexList la, lb;
        for (int i = 0; i < 64; ++i) {
            if (a >> i & 1) la.push_back(i);
            if (b >> i & 1) lb.push_back(i);
        }
        bool r = hulls_intersect(*ps, la, lb).intersects;
        map.emplace(std::make_pair(a, b), r);
        return r;
    }
};

struct Scan {
    const PointSet* ps;
    int n, k;
    bool prune;
    std::vector<uint64_t> copies;        // edge masks of every labeled copy of the target
    std::vector<uint64_t> block_mask;    // point bitmask per block
    std::vector<int> assign;             // restricted growth string
    uint64_t edges = 0;                  // edge mask over block pairs
    HullCache cache;
    SearchStats stats;
    std::optional<Partition> hit;
    std::atomic<int64_t>* best_chunk = nullptr;  // parallel early-exit signal
    int64_t chunk_id = -1;

    bool partial_ok() const {
        for (uint64_t c : copies)
            if ((edges & ~c) == 0) return true;
        return false;
    }

    bool leaf_ok() const {
        return std::binary_search(copies.begin(), copies.end(), edges);
    }

    Partition snapshot() const {
        Partition p;
        p.point_count = n;
        p.parts.resize(k);
        for (int i = 0; i < n; ++i) p.parts[assign[i]].push_back(i);
        return p;
    }

    // Assign points from position i on; blocks 0..used-1 are nonempty.
    bool step(int i, int used) {
        if (best_chunk && (stats.nodes & 1023) == 0 &&
            best_chunk->load(std::memory_order_relaxed) < chunk_id)
            return true;  // a canonically earlier chunk already has a hit
        if (used + (n - i) < k) return false;  // cannot reach k blocks
        if (i == n) {
            ++stats.leaves;
            if (leaf_ok()) {
                hit = snapshot();
                return true;
            }
            return false;
        }
        int limit = std::min(used, k - 1);
        for (int b = 0; b <= limit; ++b) {
            ++stats.nodes;
            assign[i] = b;
            uint64_t saved_edges = edges;
            uint64_t bit = uint64_t(1) << i;
            int new_used = std::max(used, b + 1);
            if (prune) {
                uint64_t grown = block_mask[b] | bit;
                for (int c = 0; c < new_used; ++c) {
                    if (c == b || block_mask[c] == 0) continue;
                    int e = pair_rank(k, b, c);
                    if (edges >> e & 1) continue;
                    if (cache.overlap(grown, block_mask[c])) edges |= uint64_t(1) << e;
                }
                if (!partial_ok()) {
                    ++stats.pruned;
                    edges = saved_edges;
                    continue;
                }
            }
            block_mask[b] |= bit;
            if (step(i + 1, new_used)) return true;
            block_mask[b] &= ~bit;
            edges = saved_edges;
        }
        return false;
    }

    // Full evaluation used when pruning is off: leaf graphs built pairwise.
    bool step_plain(int i, int used) {
        if (best_chunk && (stats.nodes & 1023) == 0 &&
            best_chunk->load(std::memory_order_relaxed) < chunk_id)
            return true;
        if (used + (n - i) < k) return false;
        if (i == n) {
            ++stats.leaves;
            edges = 0;
            for (int a = 0; a < k; ++a)
                for (int b = a + 1; b < k; ++b)
                    if (cache.overlap(block_mask[a], block_mask[b]))
                        edges |= uint64_t(1) << pair_rank(k, a, b);
            if (leaf_ok()) {
                hit = snapshot();
                return true;
            }
            return false;
        }
        int limit = std::min(used, k - 1);
        for (int b = 0; b <= limit; ++b) {
            ++stats.nodes;
            assign[i] = b;
            block_mask[b] |= uint64_t(1) << i;
            if (step_plain(i + 1, std::max(used, b + 1))) return true;
            block_mask[b] &= ~(uint64_t(1) << i);
        }
        return false;
    }

    bool run(int start, int start_used) {
        return prune ? step(start, start_used) : step_plain(start, start_used);
    }
};

Scan make_scan(const PointSet& ps, const GraphSpec& target, bool prune) {
    Scan s;
    s.ps = &ps;
    s.n = ps.size();
    s.k = target.n;
    s.prune = prune;
    s.copies = labeled_copies(target);
    s.block_mask.assign(s.k, 0);
    s.assign.assign(s.n, 0);
    s.cache.ps = &ps;
    return s;
}

SearchResult scan_serial(const PointSet& ps, const GraphSpec& target, bool prune) {
    Scan s = make_scan(ps, target, prune);
    s.run(0, 0);
    SearchResult out;
    out.partition = s.hit;
    out.stats = s.stats;
    out.stats.hull_queries = s.cache.queries;
    out.stats.cache_hits = s.cache.hits;
    return out;
}

// Restricted-growth prefixes of the given length, in canonical order. Each
// prefix owns the subtree of its completions, so prefix order is scan order.
void collect_prefixes(int n, int k, int len, int i, int used, std::vector<int>& cur,
                      std::vector<std::vector<int>>& out) {
    if (used + (n - i) < k) return;
    if (i == len) {
        out.push_back(cur);
        return;
    }
    int limit = std::min(used, k - 1);
    for (int b = 0; b <= limit; ++b) {
        cur[i] = b;
        collect_prefixes(n, k, len, i + 1, std::max(used, b + 1), cur, out);
    }
}

SearchResult scan_parallel(const PointSet& ps, const GraphSpec& target, bool prune,
                           int threads) {
    int n = ps.size();
    int k = target.n;
    int len = std::min(n, 7);
    std::vector<std::vector<int>> prefixes;
    std::vector<int> cur(len, 0);
    collect_prefixes(n, k, len, 0, 0, cur, prefixes);

    std::atomic<int64_t> best_chunk{std::numeric_limits<int64_t>::max()};
    std::vector<std::optional<Partition>> hits(prefixes.size());
    SearchStats total;
#ifdef _OPENMP
    omp_set_num_threads(threads);
#endif
#pragma omp parallel
    {
        SearchStats local;
#pragma omp for schedule(dynamic, 1)
        for (int64_t c = 0; c < (int64_t)prefixes.size(); ++c) {
            if (best_chunk.load(std::memory_order_relaxed) < c) continue;
            Scan s = make_scan(ps, target, prune);
            s.best_chunk = &best_chunk;
            s.chunk_id = c;
            int used = 0;
            for (int i = 0; i < len; ++i) {
                s.assign[i] = prefixes[c][i];
                s.block_mask[prefixes[c][i]] |= uint64_t(1) << i;
                used = std::max(used, prefixes[c][i] + 1);
            }
            if (s.prune) {
                // rebuild the partial edge mask for the prefix
                bool viable = true;
                for (int a = 0; a < used && viable; ++a)
                    for (int b = a + 1; b < used; ++b)
                        if (s.cache.overlap(s.block_mask[a], s.block_mask[b]))
                            s.edges |= uint64_t(1) << pair_rank(k, a, b);
                viable = s.partial_ok();
                if (viable && s.run(len, used) && s.hit) {
                    hits[c] = s.hit;
                    int64_t prev = best_chunk.load();
                    while (c < prev && !best_chunk.compare_exchange_weak(prev, c)) {
                    }
                } else if (!viable) {
                    ++s.stats.pruned;
                }
            } else {
                if (s.run(len, used) && s.hit) {
                    hits[c] = s.hit;
                    int64_t prev = best_chunk.load();
                    while (c < prev && !best_chunk.compare_exchange_weak(prev, c)) {
                    }
                }
            }
            local.leaves += s.stats.leaves;
            local.nodes += s.stats.nodes;
            local.pruned += s.stats.pruned;
            local.hull_queries += s.cache.queries;
            local.cache_hits += s.cache.hits;
        }
#pragma omp critical
        {
            total.leaves += local.leaves;
            total.nodes += local.nodes;
            total.pruned += local.pruned;
            total.hull_queries += local.hull_queries;
            total.cache_hits += local.cache_hits;
        }
    }
    SearchResult out;
    out.stats = total;
    int64_t best = best_chunk.load();
    if (best != std::numeric_limits<int64_t>::max()) out.partition = hits[best];
    return out;
}

}  // namespace

SearchResult is_partition_induced(const PointSet& ps, const GraphSpec& target,
                                  const SearchOptions& opt) {
    ps.validate();
    int n = ps.size();
    int k = target.n;
    if (n > 64) throw PreconditionError("search supports at most 64 points");
    if (k < 1) throw PreconditionError("target needs at least one vertex");
    uint64_t total = stirling2(n, k);
    if (total > opt.budget)
        throw InfeasibleSizeError("partition count " + std::to_string(total) +
                                  " exceeds budget " + std::to_string(opt.budget));
    if (total == 0) {
        SearchResult empty;
        return empty;
    }
    SearchResult res = (opt.threads > 0 && n > 7)
                           ? scan_parallel(ps, target, opt.prune, opt.threads)
                           : scan_serial(ps, target, opt.prune);
    if (res.partition) {
        res.partition->validate(ps);
        GraphSpec got = intersection_graph(ps, *res.partition);
        if (!graphs_isomorphic(got, target))
            throw VerificationError("reported hit does not induce the target");
    }
    if (opt.audit) {
        // Same scan on reversed point order; the hit set is order-invariant.
        PointSet rev;
        rev.dim = ps.dim;
        rev.points.assign(ps.points.rbegin(), ps.points.rend());
        SearchOptions opt2 = opt;
        opt2.audit = false;
        SearchResult res2 = is_partition_induced(rev, target, opt2);
        if (res2.found() != res.found())
            throw VerificationError("audit scan disagrees on outcome");
    }
    return res;
}

}  // namespace nerveforge
