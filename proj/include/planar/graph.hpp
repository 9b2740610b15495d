#pragma once

#include <algorithm>
#include <atomic>
#include <numeric>
#include <thread>
#include <vector>

#include "planar/core.hpp"
#include "planar/planar_complex.hpp"

namespace planar {

// Undirected multigraph over vertices 0..n-1. Parallel edges and loops are
// kept as distinct instances; adjacency is CSR over directed edge ends.
struct Multigraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    // CSR: for vertex v, ends in [offset[v], offset[v+1]) as (neighbor, edge).
    std::vector<int> offset;
    std::vector<std::pair<int, int>> ends;

    Multigraph() = default;
    Multigraph(int n_, std::vector<std::pair<int, int>> edges_) : n(n_), edges(std::move(edges_)) {
        finalize();
    }

    void finalize() {
        offset.assign(n + 1, 0);
        for (const auto& [u, v] : edges) {
            offset[u + 1]++;
            offset[v + 1]++;
        }
        std::partial_sum(offset.begin(), offset.end(), offset.begin());
        ends.resize(offset[n]);
        std::vector<int> cursor(offset.begin(), offset.end() - 1);
        for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
            auto [u, v] = edges[e];
            ends[cursor[u]++] = {v, e};
            ends[cursor[v]++] = {u, e};
        }
    }

    int num_edges() const { return static_cast<int>(edges.size()); }
    int degree(int v) const { return offset[v + 1] - offset[v]; }
};

// 1-skeleton of a complex, preserving edge ids.
inline Multigraph skeleton(const PlanarComplex& c) {
    std::vector<std::pair<int, int>> es(c.num_edges());
    for (EdgeId e = 0; e < c.num_edges(); ++e)
        es[e] = {c.edge_endpoint(e, 0), c.edge_endpoint(e, 1)};
    return Multigraph(c.num_vertices(), std::move(es));
}

// BFS distances from src. If allowed is nonempty it masks usable edges.
inline std::vector<int> bfs_distances(const Multigraph& g, int src,
                                      const std::vector<char>& allowed = {}) {
    std::vector<int> dist(g.n, -1);
    std::vector<int> queue;
    queue.reserve(g.n);
    dist[src] = 0;
    queue.push_back(src);
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int v = queue[qi];
        for (int i = g.offset[v]; i < g.offset[v + 1]; ++i) {
            auto [w, e] = g.ends[i];
            if (!allowed.empty() && !allowed[e]) continue;
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

inline bool is_connected(const Multigraph& g, const std::vector<char>& allowed = {}) {
    if (g.n == 0) return true;
    auto dist = bfs_distances(g, 0, allowed);
    return std::all_of(dist.begin(), dist.end(), [](int d) { return d >= 0; });
}

inline int eccentricity(const Multigraph& g, int src, const std::vector<char>& allowed = {}) {
    auto dist = bfs_distances(g, src, allowed);
    int ecc = 0;
    for (int d : dist) {
        require(d >= 0, ErrorCode::Disconnected, "eccentricity of a disconnected graph");
        ecc = std::max(ecc, d);
    }
    return ecc;
}

// Exact diameter by BFS from every vertex. Sources are partitioned across
// worker threads; the graph is shared read-only. A double-sweep pre-pass just
// seeds the running maximum, every vertex is still swept.
inline int diameter_exact(const Multigraph& g, int num_threads = 0) {
    require(g.n >= 1, ErrorCode::BadInput, "empty graph");
    if (g.n == 1) return 0;
    require(is_connected(g), ErrorCode::Disconnected, "diameter of a disconnected graph");
    if (num_threads <= 0) {
        unsigned hc = std::thread::hardware_concurrency();
        num_threads = hc == 0 ? 1 : static_cast<int>(hc);
    }
    num_threads = std::min(num_threads, g.n);

    std::atomic<int> best{0};
    std::atomic<int> next_src{0};
    auto sweep = [&]() {
        std::vector<int> dist(g.n);
        std::vector<int> queue;
        queue.reserve(g.n);
        int local_best = 0;
        for (;;) {
            int src = next_src.fetch_add(1);
            if (src >= g.n) break;
            std::fill(dist.begin(), dist.end(), -1);
            queue.clear();
            dist[src] = 0;
            queue.push_back(src);
            int far = 0;
            for (size_t qi = 0; qi < queue.size(); ++qi) {
                int v = queue[qi];
                int dv = dist[v];
                for (int i = g.offset[v]; i < g.offset[v + 1]; ++i) {
                    int w = g.ends[i].first;
                    if (dist[w] < 0) {
                        dist[w] = dv + 1;
                        far = dv + 1;
                        queue.push_back(w);
                    }
                }
            }
            local_best = std::max(local_best, far);
        }
        int cur = best.load();
        while (local_best > cur && !best.compare_exchange_weak(cur, local_best)) {
        }
    };

    if (num_threads == 1) {
        sweep();
    } else {
        std::vector<std::thread> workers;
        workers.reserve(num_threads);
        for (int t = 0; t < num_threads; ++t) workers.emplace_back(sweep);
        for (auto& w : workers) w.join();
    }
    return best.load();
}

// Checks that an edge subset is a spanning tree: n-1 edges, all vertices
// covered, acyclic (via union-find).
inline bool is_spanning_tree(const Multigraph& g, const std::vector<EdgeId>& tree_edges) {
    if (static_cast<int>(tree_edges.size()) != g.n - 1) return false;
    std::vector<int> parent(g.n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (EdgeId e : tree_edges) {
        auto [u, v] = g.edges[e];
        int ru = find(u), rv = find(v);
        if (ru == rv) return false;
        parent[ru] = rv;
    }
    return true;
}

// Exact diameter of a tree given as an edge subset of g, by the two-pass
// farthest-vertex method.
inline int tree_diameter(const Multigraph& g, const std::vector<EdgeId>& tree_edges) {
    require(is_spanning_tree(g, tree_edges) ||
                (static_cast<int>(tree_edges.size()) == g.n - 1 && [&] {
                    std::vector<char> allowed(g.num_edges(), 0);
                    for (EdgeId e : tree_edges) allowed[e] = 1;
                    return is_connected(g, allowed);
                }()),
            ErrorCode::NotATree, "edge set is not a spanning tree");
    if (g.n == 1) return 0;
    std::vector<char> allowed(g.num_edges(), 0);
    for (EdgeId e : tree_edges) allowed[e] = 1;
    auto d0 = bfs_distances(g, 0, allowed);
    int far = static_cast<int>(std::max_element(d0.begin(), d0.end()) - d0.begin());
    auto d1 = bfs_distances(g, far, allowed);
    return *std::max_element(d1.begin(), d1.end());
}

// Diameter of a standalone tree graph (all edges).
inline int tree_diameter(const Multigraph& tree) {
    std::vector<EdgeId> all(tree.num_edges());
    std::iota(all.begin(), all.end(), 0);
    return tree_diameter(tree, all);
}

} // namespace planar
