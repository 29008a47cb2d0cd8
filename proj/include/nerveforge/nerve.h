#pragma once

#include <vector>

#include "nerveforge/convex.h"
#include "nerveforge/graph.h"
#include "nerveforge/partition.h"

namespace nerveforge {

// Labeled graph on the parts: edge {i,j} when conv(parts[i]) meets
// conv(parts[j]). Labels are part indices, so equality of edge lists is
// equality of labeled graphs.
GraphSpec intersection_graph(const PointSet& ps, const Partition& part);

// All sets of parts whose hulls share a point, up to max_face_size parts per
// face (0 means no bound). Faces are sorted index lists in lex order within
// each size. Singletons are always present.
struct NerveComplex {
    int part_count = 0;
    std::vector<IndexList> faces;

    std::vector<IndexList> faces_of_size(int k) const;
    bool operator==(const NerveComplex&) const = default;
};

NerveComplex nerve_complex(const PointSet& ps, const Partition& part, int max_face_size = 0);

}  // namespace nerveforge
