#pragma once

#include <numeric>
#include <vector>

#include "planar/core.hpp"
#include "planar/graph.hpp"
#include "planar/planar_complex.hpp"

namespace planar {

// Dual graph of an embedded diagram: one vertex per face (outer face
// included), one edge per primal edge, index-aligned so dual edge e crosses
// primal edge e. Bridges yield dual loops; both are kept.
struct DualGraph {
    Multigraph graph;
    FaceId outer_vertex = kNone;

    // dual edge -> primal edge (identity by construction, kept explicit for
    // serialization).
    std::vector<EdgeId> dual_of;
};

inline DualGraph dual_graph(const Diagram& d) {
    const PlanarComplex& c = d.complex;
    std::vector<std::pair<int, int>> es(c.num_edges());
    for (EdgeId e = 0; e < c.num_edges(); ++e) es[e] = {c.edge_face(e, 0), c.edge_face(e, 1)};
    DualGraph dual;
    dual.graph = Multigraph(c.num_faces(), std::move(es));
    dual.outer_vertex = d.outer_face;
    dual.dual_of.resize(c.num_edges());
    std::iota(dual.dual_of.begin(), dual.dual_of.end(), 0);
    return dual;
}

// A spanning tree T of the 1-skeleton together with the dual spanning tree
// T* whose edges are the duals of the edges outside T. T and T* partition
// the edge set under the index-aligned duality bijection.
struct SpanningTreePair {
    std::vector<EdgeId> tree;      // edges of T, ascending
    std::vector<EdgeId> dual_tree; // edges of T* (= primal ids of G \ T), ascending
};

inline SpanningTreePair dual_tree(const Diagram& d, const std::vector<EdgeId>& tree_edges) {
    const PlanarComplex& c = d.complex;
    Multigraph g = skeleton(c);

    // Acyclicity first, then coverage.
    {
        std::vector<int> parent(g.n);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (EdgeId e : tree_edges) {
            require(e >= 0 && e < g.num_edges(), ErrorCode::BadInput, "tree edge out of range");
            auto [u, v] = g.edges[e];
            int ru = find(u), rv = find(v);
            require(ru != rv, ErrorCode::NotAcyclic, "proposed tree contains a cycle");
            parent[ru] = rv;
        }
    }
    require(static_cast<int>(tree_edges.size()) == g.n - 1, ErrorCode::NotSpanning,
            "tree must have V - 1 edges");

    SpanningTreePair pair;
    pair.tree = tree_edges;
    std::sort(pair.tree.begin(), pair.tree.end());
    std::vector<char> in_tree(g.num_edges(), 0);
    for (EdgeId e : pair.tree) in_tree[e] = 1;
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        if (!in_tree[e]) pair.dual_tree.push_back(e);

    // The complement is automatically a spanning tree of the dual; verify it
    // anyway so every returned pair is a checked witness.
    DualGraph dual = dual_graph(d);
    require(is_spanning_tree(dual.graph, pair.dual_tree), ErrorCode::NotSpanning,
            "dual complement failed the spanning tree check");
    return pair;
}

} // namespace planar
