#pragma once

#include <random>
#include <vector>

#include "planar/core.hpp"
#include "planar/graph.hpp"

namespace planar {

// Uniformly random spanning tree by Wilson's algorithm: loop-erased random
// walks from each vertex to the growing tree, with cycle popping done by
// successor overwriting. Works on multigraphs (parallel edges are distinct
// choices, so trees are uniform over edge-labelled spanning trees).
inline std::vector<EdgeId> wilson_random_spanning_tree(const Multigraph& g, std::mt19937_64& rng) {
    require(g.n >= 1, ErrorCode::BadInput, "empty graph");
    std::vector<char> in_tree(g.n, 0);
    std::vector<std::pair<int, int>> succ(g.n, {-1, -1}); // (next vertex, edge)
    std::vector<EdgeId> tree;
    tree.reserve(g.n - 1);
    in_tree[0] = 1;
    for (int v = 0; v < g.n; ++v) {
        int u = v;
        while (!in_tree[u]) {
            int deg = g.degree(u);
            require(deg > 0, ErrorCode::Disconnected, "isolated vertex in Wilson walk");
            std::uniform_int_distribution<int> pick(0, deg - 1);
            succ[u] = g.ends[g.offset[u] + pick(rng)];
            u = succ[u].first;
        }
        u = v;
        while (!in_tree[u]) {
            in_tree[u] = 1;
            tree.push_back(succ[u].second);
            u = succ[u].first;
        }
    }
    return tree;
}

inline std::vector<EdgeId> wilson_random_spanning_tree(const Multigraph& g, uint64_t seed) {
    std::mt19937_64 rng(seed);
    return wilson_random_spanning_tree(g, rng);
}

// All spanning trees by backtracking over edge subsets (exhaustive oracle;
// intended for E <= ~16).
inline std::vector<std::vector<EdgeId>> enumerate_spanning_trees(const Multigraph& g) {
    std::vector<std::vector<EdgeId>> out;
    const int E = g.num_edges();
    const int need = g.n - 1;
    if (need == 0) {
        out.push_back({});
        return out;
    }
    std::vector<EdgeId> chosen;
    // Union-find state is rebuilt per candidate; fine at oracle scale.
    auto acyclic = [&](const std::vector<EdgeId>& es) {
        std::vector<int> parent(g.n);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (EdgeId e : es) {
            auto [u, v] = g.edges[e];
            int ru = find(u), rv = find(v);
            if (ru == rv) return false;
            parent[ru] = rv;
        }
        return true;
    };
    auto rec = [&](auto&& self, int from) -> void {
        if (static_cast<int>(chosen.size()) == need) {
            if (acyclic(chosen)) out.push_back(chosen);
            return;
        }
        int remaining = need - static_cast<int>(chosen.size());
        for (int e = from; e + remaining <= E; ++e) {
            chosen.push_back(e);
            if (acyclic(chosen)) self(self, e + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

inline long long count_spanning_trees(const Multigraph& g) {
    return static_cast<long long>(enumerate_spanning_trees(g).size());
}

} // namespace planar
