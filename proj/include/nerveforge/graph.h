#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nerveforge {

enum class GraphKind { tree, cycle, general };

// Small undirected simple graph with a verified kind tag.
struct GraphSpec {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // normalized u < v, sorted
    GraphKind kind = GraphKind::general;

    static GraphSpec make(int n, std::vector<std::pair<int, int>> edges, GraphKind kind);
    static GraphSpec path(int n);
    static GraphSpec star(int n);   // vertex 0 is the center
    static GraphSpec cycle(int n);

    bool has_edge(int u, int v) const;
    std::vector<std::vector<int>> adjacency() const;
    std::vector<int> degrees() const;
    bool connected() const;
    bool is_tree() const;
    bool is_cycle() const;
    bool triangle_free() const;
    std::string edge_key() const;  // canonical textual form, for dedup maps
};

// Explicit bijection check; returns a vertex map when isomorphic.
std::optional<std::vector<int>> graphs_isomorphic(const GraphSpec& a, const GraphSpec& b);

// BFS order from vertex 0 (smallest-index neighbors first) plus parent array.
// Each non-root vertex appears after its parent, so prefixes induce subtrees.
struct TreeOrder {
    std::vector<int> order;
    std::vector<int> parent;  // indexed by vertex, -1 for the root
};
TreeOrder bfs_tree_order(const GraphSpec& tree);

// Caterpillar decomposition: spine path plus leaves hanging off spine
// vertices. Spine ends that are plain leaves fold into the leaf lists when
// their neighbor carries other leaves, which makes the form canonical.
struct CaterpillarShape {
    std::vector<int> spine;
    std::vector<std::vector<int>> leaves;  // parallel to spine
};
std::optional<CaterpillarShape> caterpillar_decompose(const GraphSpec& tree);

// All isomorphism-class representatives of trees on n vertices.
std::vector<GraphSpec> all_trees(int n);
// All connected graphs on n vertices up to isomorphism (n small).
std::vector<GraphSpec> all_connected_graphs(int n);

// Edge set of every labeled isomorphic copy of g, as C(n,2)-bit masks with
// bit index pair_rank(u,v). Empty when n exceeds the permutation cap.
std::vector<uint64_t> labeled_copies(const GraphSpec& g, int max_vertices = 10);
int pair_rank(int n, int u, int v);
uint64_t edge_mask(const GraphSpec& g);

}  // namespace nerveforge
