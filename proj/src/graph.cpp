#include "nerveforge/graph.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "nerveforge/errors.h"

namespace nerveforge {

GraphSpec GraphSpec::make(int n, std::vector<std::pair<int, int>> edges, GraphKind kind) {
    if (n < 1) throw PreconditionError("graph needs at least one vertex");
    for (auto& [u, v] : edges) {
        if (u == v) throw PreconditionError("self-loop");
        if (u < 0 || v < 0 || u >= n || v >= n) throw PreconditionError("edge endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw PreconditionError("duplicate edge");
    GraphSpec g;
    g.n = n;
    g.edges = std::move(edges);
    g.kind = kind;
    if (kind == GraphKind::tree && !g.is_tree()) throw NotATreeError("graph is not a tree");
    if (kind == GraphKind::cycle && !g.is_cycle()) throw PreconditionError("graph is not a cycle");
    return g;
}

GraphSpec GraphSpec::path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return make(n, std::move(e), GraphKind::tree);
}

GraphSpec GraphSpec::star(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < n; ++i) e.emplace_back(0, i);
    return make(n, std::move(e), GraphKind::tree);
}

GraphSpec GraphSpec::cycle(int n) {
    if (n < 3) throw PreconditionError("cycle needs at least three vertices");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return make(n, std::move(e), GraphKind::cycle);
}

bool GraphSpec::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

std::vector<std::vector<int>> GraphSpec::adjacency() const {
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& row : adj) std::sort(row.begin(), row.end());
    return adj;
}

std::vector<int> GraphSpec::degrees() const {
    std::vector<int> deg(n, 0);
    for (auto [u, v] : edges) {
        ++deg[u];
        ++deg[v];
    }
    return deg;
}

bool GraphSpec::connected() const {
    if (n == 0) return false;
    auto adj = adjacency();
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int count = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : adj[u])
            if (!seen[v]) {
                seen[v] = 1;
                ++count;
                q.push(v);
            }
    }
    return count == n;
}

bool GraphSpec::is_tree() const {
    return (int)edges.size() == n - 1 && connected();
}

bool GraphSpec::is_cycle() const {
    if (n < 3 || (int)edges.size() != n) return false;
    for (int d : degrees())
        if (d != 2) return false;
    return connected();
}

bool GraphSpec::triangle_free() const {
    for (auto [u, v] : edges)
        for (int w = 0; w < n; ++w)
            if (w != u && w != v && has_edge(u, w) && has_edge(v, w)) return false;
    return true;
}

std::string GraphSpec::edge_key() const {
    std::ostringstream os;
    os << n << ':';
    for (auto [u, v] : edges) os << u << '-' << v << ';';
    return os.str();
}

namespace {

bool extend_map(const GraphSpec& a, const GraphSpec& b,
                const std::vector<std::vector<int>>& adj_a, const std::vector<int>& deg_a,
                const std::vector<int>& deg_b, std::vector<int>& map_ab,
                std::vector<char>& used_b, int next) {
    if (next == a.n) return true;
    for (int cand = 0; cand < b.n; ++cand) {
        if (used_b[cand] || deg_a[next] != deg_b[cand]) continue;
        bool ok = true;
        for (int w : adj_a[next]) {
            if (map_ab[w] >= 0 && !b.has_edge(cand, map_ab[w])) {
                ok = false;
                break;
            }
        }
        // also no extra edges into already-mapped vertices
        if (ok) {
            for (int w = 0; w < next; ++w) {
                if (!a.has_edge(next, w) && b.has_edge(cand, map_ab[w])) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) continue;
        map_ab[next] = cand;
        used_b[cand] = 1;
        if (extend_map(a, b, adj_a, deg_a, deg_b, map_ab, used_b, next + 1)) return true;
        map_ab[next] = -1;
        used_b[cand] = 0;
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> graphs_isomorphic(const GraphSpec& a, const GraphSpec& b) {
    if (a.n != b.n || a.edges.size() != b.edges.size()) return std::nullopt;
    auto deg_a = a.degrees();
    auto deg_b = b.degrees();
    auto sorted_a = deg_a;
    auto sorted_b = deg_b;
    std::sort(sorted_a.begin(), sorted_a.end());
    std::sort(sorted_b.begin(), sorted_b.end());
    if (sorted_a != sorted_b) return std::nullopt;
    auto adj_a = a.adjacency();
    std::vector<int> map_ab(a.n, -1);
    std::vector<char> used_b(b.n, 0);
    if (!extend_map(a, b, adj_a, deg_a, deg_b, map_ab, used_b, 0)) return std::nullopt;
    // confirm the bijection carries edges both ways
    std::set<std::pair<int, int>> image;
    for (auto [u, v] : a.edges) {
        int x = map_ab[u], y = map_ab[v];
        if (x > y) std::swap(x, y);
        image.emplace(x, y);
    }
    std::set<std::pair<int, int>> target(b.edges.begin(), b.edges.end());
    if (image != target) throw BijectionError("isomorphism check produced a bad map");
    return map_ab;
}

TreeOrder bfs_tree_order(const GraphSpec& tree) {
    if (!tree.is_tree()) throw NotATreeError("bfs_tree_order needs a tree");
    auto adj = tree.adjacency();
    TreeOrder out;
    out.parent.assign(tree.n, -1);
    std::vector<char> seen(tree.n, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        out.order.push_back(u);
        for (int v : adj[u])
            if (!seen[v]) {
                seen[v] = 1;
                out.parent[v] = u;
                q.push(v);
            }
    }
    return out;
}

namespace {

// farthest vertex from src with smallest-id tie-break, plus parent array
std::pair<int, std::vector<int>> bfs_far(const GraphSpec& g, int src) {
    auto adj = g.adjacency();
    std::vector<int> dist(g.n, -1), par(g.n, -1);
    std::queue<int> q;
    q.push(src);
    dist[src] = 0;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : adj[u])
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                par[v] = u;
                q.push(v);
            }
    }
    int best = src;
    for (int v = 0; v < g.n; ++v)
        if (dist[v] > dist[best]) best = v;
    return {best, par};
}

}  // namespace

std::optional<CaterpillarShape> caterpillar_decompose(const GraphSpec& tree) {
    if (!tree.is_tree()) throw NotATreeError("caterpillar_decompose needs a tree");
    if (tree.n == 1) return CaterpillarShape{{0}, {{}}};
    auto [a, par0] = bfs_far(tree, 0);
    auto [b, par] = bfs_far(tree, a);
    std::vector<int> path;
    for (int v = b; v >= 0; v = par[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());

    auto deg = tree.degrees();
    auto adj = tree.adjacency();
    // Fold a spine end into the leaf list when its neighbor has other leaves;
    // keeps star centers on the spine rather than a leaf chosen by BFS.
    auto trim_end = [&](bool front) {
        if (path.size() < 2) return;
        int end = front ? path.front() : path.back();
        int nb = front ? path[1] : path[path.size() - 2];
        if (deg[end] != 1) return;
        bool nb_has_other_leaf = false;
        for (int w : adj[nb])
            if (w != end && deg[w] == 1) nb_has_other_leaf = true;
        if (!nb_has_other_leaf) return;
        if (front)
            path.erase(path.begin());
        else
            path.pop_back();
    };
    trim_end(true);
    trim_end(false);

    std::vector<char> on_path(tree.n, 0);
    for (int v : path) on_path[v] = 1;
    CaterpillarShape shape;
    shape.spine = path;
    shape.leaves.assign(path.size(), {});
    for (size_t i = 0; i < path.size(); ++i)
        for (int w : adj[path[i]])
            if (!on_path[w]) {
                if (deg[w] != 1) return std::nullopt;
                shape.leaves[i].push_back(w);
            }
    // every vertex accounted for
    size_t total = shape.spine.size();
    for (auto& l : shape.leaves) total += l.size();
    if ((int)total != tree.n) return std::nullopt;
    return shape;
}

namespace {

// canonical string of a rooted tree (AHU)
std::string ahu(int u, int parent, const std::vector<std::vector<int>>& adj) {
    std::vector<std::string> kids;
    for (int v : adj[u])
        if (v != parent) kids.push_back(ahu(v, u, adj));
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (auto& k : kids) s += k;
    s += ")";
    return s;
}

std::string tree_canon(const GraphSpec& t) {
    // root at centroid(s), take the lexicographically smaller form
    auto adj = t.adjacency();
    std::vector<int> size(t.n, 0);
    std::vector<int> order, par(t.n, -1);
    order.reserve(t.n);
    order.push_back(0);
    for (size_t i = 0; i < order.size(); ++i)
        for (int v : adj[order[i]])
            if (v != par[order[i]]) {
                par[v] = order[i];
                order.push_back(v);
            }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        size[*it] += 1;
        if (par[*it] >= 0) size[par[*it]] += size[*it];
    }
    std::vector<int> centroids;
    for (int u = 0; u < t.n; ++u) {
        int biggest = t.n - size[u];
        for (int v : adj[u])
            if (v != par[u]) biggest = std::max(biggest, size[v]);
        if (biggest <= t.n / 2) centroids.push_back(u);
    }
    std::string best;
    for (int c : centroids) {
        std::string s = ahu(c, -1, adj);
        if (best.empty() || s < best) best = s;
    }
    return best;
}

}  // namespace

std::vector<GraphSpec> all_trees(int n) {
    std::vector<GraphSpec> out;
    if (n == 1) {
        out.push_back(GraphSpec::make(1, {}, GraphKind::tree));
        return out;
    }
    if (n == 2) {
        out.push_back(GraphSpec::path(2));
        return out;
    }
    // Prufer sequences enumerate all labeled trees; dedupe by canonical form.
    std::set<std::string> seen;
    std::vector<int> code(n - 2, 0);
    while (true) {
        std::vector<int> deg(n, 1);
        for (int c : code) ++deg[c];
        std::vector<std::pair<int, int>> edges;
        std::priority_queue<int, std::vector<int>, std::greater<int>> leaves;
        for (int v = 0; v < n; ++v)
            if (deg[v] == 1) leaves.push(v);
        std::vector<int> work = code;
        for (int c : work) {
            int leaf = leaves.top();
            leaves.pop();
            edges.emplace_back(std::min(leaf, c), std::max(leaf, c));
            if (--deg[c] == 1) leaves.push(c);
        }
        int u = leaves.top();
        leaves.pop();
        int v = leaves.top();
        edges.emplace_back(std::min(u, v), std::max(u, v));
        GraphSpec t = GraphSpec::make(n, std::move(edges), GraphKind::tree);
        if (seen.insert(tree_canon(t)).second) out.push_back(t);
        int i = n - 3;
        while (i >= 0 && code[i] == n - 1) code[i--] = 0;
        if (i < 0) break;
        ++code[i];
    }
    return out;
}

std::vector<GraphSpec> all_connected_graphs(int n) {
    if (n > 6) throw PreconditionError("all_connected_graphs only supports n <= 6");
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::vector<GraphSpec> out;
    for (uint64_t mask = 0; mask < (uint64_t(1) << pairs.size()); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1) edges.push_back(pairs[i]);
        GraphSpec g = GraphSpec::make(n, std::move(edges), GraphKind::general);
        if (!g.connected()) continue;
        bool dup = false;
        for (auto& h : out)
            if (graphs_isomorphic(g, h)) {
                dup = true;
                break;
            }
        if (!dup) out.push_back(g);
    }
    return out;
}

int pair_rank(int n, int u, int v) {
    if (u > v) std::swap(u, v);
    // pairs (0,1),(0,2),...,(0,n-1),(1,2),... in order
    return u * n - u * (u + 1) / 2 + (v - u - 1);
}

uint64_t edge_mask(const GraphSpec& g) {
    uint64_t m = 0;
    for (auto [u, v] : g.edges) m |= uint64_t(1) << pair_rank(g.n, u, v);
    return m;
}

std::vector<uint64_t> labeled_copies(const GraphSpec& g, int max_vertices) {
    if (g.n > max_vertices || g.n * (g.n - 1) / 2 > 64) return {};
    std::vector<int> perm(g.n);
    std::iota(perm.begin(), perm.end(), 0);
    std::set<uint64_t> masks;
    do {
        uint64_t m = 0;
        for (auto [u, v] : g.edges) m |= uint64_t(1) << pair_rank(g.n, perm[u], perm[v]);
        masks.insert(m);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return {masks.begin(), masks.end()};
}

}  // namespace nerveforge
