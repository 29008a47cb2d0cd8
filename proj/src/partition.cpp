#include "nerveforge/partition.h"

#include <algorithm>

#include "nerveforge/errors.h"

namespace nerveforge {

int Partition::part_of(Index i) const {
    for (int j = 0; j < (int)parts.size(); ++j)
        for (Index k : parts[j])
            if (k == i) return j;
    return -1;
}

void Partition::validate(const PointSet& ps) const {
    if (point_count != ps.size()) throw PartitionError("point count mismatch");
    std::vector<int> seen(point_count, 0);
    for (auto& part : parts) {
        if (part.empty()) throw PartitionError("empty part");
        for (Index i : part) {
            if (i < 0 || i >= point_count) throw PartitionError("index out of range");
            if (seen[i]++) throw PartitionError("index assigned twice");
        }
    }
    for (int i = 0; i < point_count; ++i)
        if (!seen[i]) throw PartitionError("index unassigned");
}

Partition Partition::restricted(const IndexList& keep) const {
    std::vector<char> keep_flag(point_count, 0);
    for (Index i : keep) keep_flag[i] = 1;
    Partition out;
    out.point_count = point_count;
    out.parts.resize(parts.size());
    for (int j = 0; j < (int)parts.size(); ++j)
        for (Index i : parts[j])
            if (keep_flag[i]) out.parts[j].push_back(i);
    return out;
}

std::vector<int> Partition::labels() const {
    std::vector<int> lab(point_count, -1);
    for (int j = 0; j < (int)parts.size(); ++j)
        for (Index i : parts[j]) lab[i] = j;
    return lab;
}

}  // namespace nerveforge
