#pragma once

#include <cstdint>
#include <optional>

#include "nerveforge/convex.h"
#include "nerveforge/graph.h"
#include "nerveforge/partition.h"

namespace nerveforge {

struct SearchStats {
    uint64_t leaves = 0;        // complete partitions whose graph was decided
    uint64_t nodes = 0;         // point assignments explored
    uint64_t pruned = 0;        // subtrees cut by the partial-graph test
    uint64_t hull_queries = 0;  // exact hull tests actually run
    uint64_t cache_hits = 0;
};

struct SearchOptions {
    // Cap on the number of complete partitions the search may have to
    // visit. Checked against the exact count S(n, k) before enumeration
    // starts, so exceeding it is deterministic and immediate.
    uint64_t budget = 50'000'000;
    bool prune = true;
    bool audit = false;  // re-run on permuted input, compare outcomes
    int threads = 0;     // 0 = serial; otherwise chunked parallel scan
};

struct SearchResult {
    std::optional<Partition> partition;  // first hit in canonical block order
    SearchStats stats;
    bool found() const { return partition.has_value(); }
};

// Scans partitions of the points into exactly target.n nonempty blocks, in
// canonical restricted-growth order, for one whose hull intersection graph is
// isomorphic to the target. The returned hit is the canonically first one
// regardless of thread count.
SearchResult is_partition_induced(const PointSet& ps, const GraphSpec& target,
                                  const SearchOptions& opt = {});

// Number of partitions of an n-set into exactly k nonempty blocks,
// saturating at uint64 max.
uint64_t stirling2(int n, int k);

}  // namespace nerveforge
