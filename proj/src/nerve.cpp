#include "nerveforge/nerve.h"

#include <algorithm>
#include <set>

#include "nerveforge/errors.h"

namespace nerveforge {

GraphSpec intersection_graph(const PointSet& ps, const Partition& part) {
    part.validate(ps);
    int k = part.part_count();
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (hulls_intersect(ps, part.parts[i], part.parts[j]).intersects)
                edges.emplace_back(i, j);
    return GraphSpec::make(k, std::move(edges), GraphKind::general);
}

NerveComplex nerve_complex(const PointSet& ps, const Partition& part, int max_face_size) {
    part.validate(ps);
    int k = part.part_count();
    if (max_face_size <= 0 || max_face_size > k) max_face_size = k;
    NerveComplex nc;
    nc.part_count = k;
    std::vector<IndexList> prev;
    for (int i = 0; i < k; ++i) {
        nc.faces.push_back({i});
        prev.push_back({i});
    }
    // a face's subsets are faces, so grow candidates one part at a time
    std::set<IndexList> prev_set(prev.begin(), prev.end());
    for (int size = 2; size <= max_face_size && !prev.empty(); ++size) {
        std::vector<IndexList> cur;
        std::set<IndexList> tried;
        for (auto& face : prev) {
            for (int extra = face.back() + 1; extra < k; ++extra) {
                IndexList cand = face;
                cand.push_back(extra);
                if (!tried.insert(cand).second) continue;
                bool closed = true;
                for (int drop = 0; drop < size && closed; ++drop) {
                    IndexList sub;
                    for (int t = 0; t < size; ++t)
                        if (t != drop) sub.push_back(cand[t]);
                    if (!prev_set.count(sub)) closed = false;
                }
                if (!closed) continue;
                std::vector<IndexList> groups;
                for (int p : cand) groups.push_back(part.parts[p]);
                if (common_point(ps, groups)) cur.push_back(cand);
            }
        }
        std::sort(cur.begin(), cur.end());
        for (auto& f : cur) nc.faces.push_back(f);
        prev_set = std::set<IndexList>(cur.begin(), cur.end());
        prev = std::move(cur);
    }
    return nc;
}

std::vector<IndexList> NerveComplex::faces_of_size(int k) const {
    std::vector<IndexList> out;
    for (auto& f : faces)
        if ((int)f.size() == k) out.push_back(f);
    return out;
}

}  // namespace nerveforge
