#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "nerveforge/convex.h"
#include "nerveforge/graph.h"
#include "nerveforge/partition.h"

namespace nerveforge {

// Partition of 2n points in convex position realizing an n-vertex tree:
// part j hosts tree vertex j and two hulls meet exactly when the vertices
// are adjacent. Every part gets exactly two points. The trace carries one
// LeafLineEvent per non-root vertex for later point placement.
PartitionResult tree_partition_convex_2d(const GraphSpec& tree, const PointSet& ps);

// Places every point of ps outside `base` into the partition built on the
// base points, replaying the recorded leaf lines from the outermost level
// inward, and returns the full partition. `built` indexes the base points
// 0..|base|-1 in base order. The hull intersection graph is unchanged and
// this is verified before returning.
Partition extend_partition_2d(const PointSet& ps, const IndexList& base,
                              const PartitionResult& built);

// Same realization problem on (n-1)(d+1)+1 points whose orientation signs
// are uniformly positive in index order (the sign pattern of increasing
// points on the moment curve). Works in any dimension d >= 2.
PartitionResult tree_partition_cyclic(const GraphSpec& tree, const PointSet& ps);

// Replay for the cyclic construction. Each split event keeps the hyperplane
// separating its insertion gap from the rest of the base points; a new point
// is absorbed by a hull that already contains it, otherwise it walks down the
// nested gaps and joins the first candidate part whose grown hull stays
// disjoint from every non-adjacent part. The hull intersection graph is
// unchanged and this is verified before returning.
Partition extend_partition_cyclic(const PointSet& ps, const IndexList& base,
                                  const PartitionResult& built);

// Caterpillar trees on arbitrary points in general position: needs
// (d+1)(n-1)+1 points; any surplus joins the last spine part. Points are
// consumed in increasing order of a generic linear functional.
PartitionResult caterpillar_partition(const GraphSpec& tree, const PointSet& ps);

// Star on 2n planar points in general position. The center part is anchored
// at the lex-min point; the remaining parts are crossing pairs and interior
// singletons.
PartitionResult star_partition_2d(const GraphSpec& star, const PointSet& ps);

// Greedy matching of two linearly separated planar sets into crossing pairs
// with pairwise disjoint segments: each round takes a hull edge of the
// remaining points with one endpoint on each side. Requires |a| == |b|.
std::vector<std::pair<Index, Index>> pair_across_line(const PointSet& ps, const IndexList& a,
                                                      const IndexList& b,
                                                      const Hyperplane& line);

// End-to-end construction for an arbitrary tree: caterpillars go straight to
// the functional construction; other trees first locate a convex (d = 2) or
// cyclic (d >= 3) subset, build there, and place the remaining points by
// replay. Throws SubsetNotFoundError when no usable subset exists.
struct PipelineResult {
    Partition partition;
    ConstructionTrace trace;
    IndexList base_subset;  // empty for the direct route
    std::string route;      // "caterpillar", "convex-subset", "cyclic-subset"
};
PipelineResult tverberg_tree_pipeline(const PointSet& ps, const GraphSpec& tree,
                                      uint64_t subset_budget = 200'000'000);

}  // namespace nerveforge
