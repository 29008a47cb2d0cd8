#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "nerveforge/geometry.h"

namespace nerveforge {

// Partition of point indices into labeled parts. Part labels are the vertex
// ids of the target graph, so part j hosts graph vertex j.
struct Partition {
    int point_count = 0;
    std::vector<IndexList> parts;

    int part_count() const { return (int)parts.size(); }
    int part_of(Index i) const;                  // -1 when unassigned
    void validate(const PointSet& ps) const;     // exact cover, in range
    Partition restricted(const IndexList& keep) const;  // same labels, subset
    std::vector<int> labels() const;             // point index -> part
};

// Replayable events recorded while a partition is built. Replays use these to
// place additional points without re-running the whole construction.
struct LeafLineEvent {
    int level = 0;            // recursion depth, leaves have the largest level
    int leaf_part = 0;        // part split off at this level
    int parent_part = 0;      // part it stays adjacent to
    Index pair_low = 0;       // the two points removed at this level
    Index pair_high = 0;
    Hyperplane boundary;      // line through the pair; positive side holds the
                              // parent point the pair was split off around
};

struct RadonStepEvent {
    int level = 0;
    int part_a = 0;           // part receiving the A side
    int part_b = 0;           // part receiving the B side
    IndexList simplex;        // the d+2 points split at this step
    IndexList side_a;
    IndexList side_b;
};

struct SubpolytopeSplitEvent {
    int level = 0;
    int part_q = 0;           // part keeping the shared vertex
    int part_r = 0;           // part split off
    Index shared;             // vertex the new block was inserted after
    IndexList q_side;         // points already present, minus the shared one
    IndexList r_side;         // the freshly inserted points
    Hyperplane boundary;      // negative side holds the insertion gap: the new
                              // block plus everything inserted into it later;
                              // q_side stays strictly positive
};

struct SectorAssignmentEvent {
    int part = 0;
    IndexList sector_points;
};

using TraceEvent =
    std::variant<LeafLineEvent, RadonStepEvent, SubpolytopeSplitEvent, SectorAssignmentEvent>;

struct ConstructionTrace {
    std::vector<TraceEvent> events;

    template <class E>
    std::vector<E> of_kind() const {
        std::vector<E> out;
        for (auto& ev : events)
            if (auto* e = std::get_if<E>(&ev)) out.push_back(*e);
        return out;
    }
};

struct PartitionResult {
    Partition partition;
    ConstructionTrace trace;
};

}  // namespace nerveforge
