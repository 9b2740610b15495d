#pragma once

#include <array>
#include <optional>
#include <random>
#include <vector>

#include "planar/builder.hpp"
#include "planar/core.hpp"
#include "planar/planar_complex.hpp"

namespace planar {

// Abstract trivalent tree: level 0 is a lone edge, level n is three copies of
// level n-1 with one leaf of each identified (the wedge vertex). Carries the
// half-open edge ownership: edge 0 owns both endpoints, every other edge owns
// exactly one, partitioning the vertex set.
struct AbstractTrivalentTree {
    int level = 0;
    int num_vertices = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> leaves; // ascending
    std::vector<char> is_wedge;
    // For each wedge vertex, its three incident edges in canonical rotational
    // order (copy order at the identification step); {-1,-1,-1} otherwise.
    std::vector<std::array<int, 3>> wedge_edges_of;
    int distinguished_edge = 0;
    std::vector<int> vertex_owner; // vertex -> owning edge

    int num_edges() const { return static_cast<int>(edges.size()); }
};

// Canonical choice identifies the lowest-indexed leaf of each copy; a seed
// draws the leaf choices instead (the family is not unique).
inline AbstractTrivalentTree trivalent_tree(int n, std::optional<uint64_t> choice_seed = {}) {
    require(n >= 0, ErrorCode::BadInput, "level must be nonnegative");
    std::mt19937_64 rng(choice_seed.value_or(0));
    const bool seeded = choice_seed.has_value();

    AbstractTrivalentTree t;
    t.level = 0;
    t.num_vertices = 2;
    t.edges = {{0, 1}};
    t.leaves = {0, 1};
    t.is_wedge = {0, 0};
    t.wedge_edges_of = {{-1, -1, -1}, {-1, -1, -1}};

    for (int step = 1; step <= n; ++step) {
        const AbstractTrivalentTree prev = t;
        const int V = prev.num_vertices;
        const int E = prev.num_edges();

        int chosen[3];
        for (int c = 0; c < 3; ++c) {
            if (seeded) {
                std::uniform_int_distribution<int> pick(0, static_cast<int>(prev.leaves.size()) - 1);
                chosen[c] = prev.leaves[pick(rng)];
            } else {
                chosen[c] = prev.leaves.front();
            }
        }

        // Compact relabelling: copies occupy [cV, (c+1)V); the chosen leaves
        // of copies 1 and 2 collapse onto copy 0's chosen leaf.
        std::vector<int> new_id(3 * V, -1);
        int counter = 0;
        for (int raw = 0; raw < 3 * V; ++raw) {
            if (raw == chosen[1] + V || raw == chosen[2] + 2 * V) continue;
            new_id[raw] = counter++;
        }
        new_id[chosen[1] + V] = new_id[chosen[0]];
        new_id[chosen[2] + 2 * V] = new_id[chosen[0]];

        AbstractTrivalentTree next;
        next.level = step;
        next.num_vertices = counter;
        next.is_wedge.assign(counter, 0);
        next.wedge_edges_of.assign(counter, {-1, -1, -1});
        next.edges.reserve(3 * E);
        for (int c = 0; c < 3; ++c) {
            for (const auto& [a, b] : prev.edges)
                next.edges.push_back({new_id[a + c * V], new_id[b + c * V]});
            for (int leaf : prev.leaves)
                if (leaf != chosen[c]) next.leaves.push_back(new_id[leaf + c * V]);
            for (int v = 0; v < V; ++v) {
                if (prev.is_wedge[v]) {
                    int w = new_id[v + c * V];
                    next.is_wedge[w] = 1;
                    for (int s = 0; s < 3; ++s)
                        next.wedge_edges_of[w][s] = prev.wedge_edges_of[v][s] + c * E;
                }
            }
        }
        std::sort(next.leaves.begin(), next.leaves.end());

        const int w = new_id[chosen[0]];
        next.is_wedge[w] = 1;
        for (int c = 0; c < 3; ++c) {
            int incident = -1;
            for (int e = 0; e < E; ++e) {
                if (prev.edges[e].first == chosen[c] || prev.edges[e].second == chosen[c]) {
                    incident = e;
                    break;
                }
            }
            next.wedge_edges_of[w][c] = incident + c * E;
        }
        t = std::move(next);
    }

    // Half-open ownership: orient away from the distinguished edge; every
    // vertex is owned by the edge that reaches it, edge 0 owns both ends.
    t.distinguished_edge = 0;
    t.vertex_owner.assign(t.num_vertices, -1);
    std::vector<std::vector<std::pair<int, int>>> adj(t.num_vertices);
    for (int e = 0; e < t.num_edges(); ++e) {
        auto [a, b] = t.edges[e];
        adj[a].push_back({b, e});
        adj[b].push_back({a, e});
    }
    auto [r0, r1] = t.edges[0];
    t.vertex_owner[r0] = 0;
    t.vertex_owner[r1] = 0;
    std::vector<int> stack = {r0, r1};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (auto [w, e] : adj[v]) {
            if (t.vertex_owner[w] < 0) {
                t.vertex_owner[w] = e;
                stack.push_back(w);
            }
        }
    }
    return t;
}

// p_n = (5*3^n + 3) * n / 2, the boundary circuit length of the fattened tree.
inline long long boundary_length_formula(int n) {
    require(n >= 1, ErrorCode::BadInput, "defined for n >= 1");
    long long pow3 = 1;
    for (int i = 0; i < n; ++i) pow3 *= 3;
    return (5 * pow3 + 3) * n / 2;
}

// Assignment of diagram vertices/edges to abstract tree edges: the inscribed
// subdivided copy of the tree running along grid centre lines and junction
// spurs. Vertex sets follow the half-open ownership at shared junction images.
struct InscribedTreeMap {
    int level = 0;
    std::vector<std::vector<VertexId>> vertices_of; // per abstract edge
    std::vector<std::vector<EdgeId>> edges_of;      // per abstract edge
    std::vector<VertexId> image_of_vertex;          // abstract vertex -> diagram vertex
};

namespace detail {

// Layout of the fattened tree: one side-n triangular-lattice patch per wedge,
// one n x n grid of squares per tree edge, grids sharing their end columns
// with patch sides. Vertex/edge/face ids are a deterministic function of
// (tree, n), so rebuilding the layout reproduces identical ids.
struct FattenLayout {
    ComplexBuilder builder;
    int n = 0;
    InscribedTreeMap map;
};

inline FattenLayout build_fattened_tree(const AbstractTrivalentTree& t, int n) {
    require(n >= 1, ErrorCode::BadInput, "fatten needs n >= 1");
    FattenLayout L;
    L.n = n;
    ComplexBuilder& b = L.builder;
    const int m0 = n / 2;

    // Patch vertices, indexed (i, j) with i + j <= n.
    auto tri_at = [n](const std::vector<VertexId>& tab, int i, int j) {
        return tab[i * (n + 1) + j];
    };
    std::vector<std::vector<VertexId>> patch(t.num_vertices);
    for (int w = 0; w < t.num_vertices; ++w) {
        if (!t.is_wedge[w]) continue;
        patch[w].assign((n + 1) * (n + 1), kNone);
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n - i; ++j) patch[w][i * (n + 1) + j] = b.add_vertex();
    }
    // Side s of a patch in boundary order: S0 bottom, S1 hypotenuse, S2 left.
    auto side_vertex = [&](int w, int s, int k) {
        if (s == 0) return tri_at(patch[w], k, 0);
        if (s == 1) return tri_at(patch[w], n - k, k);
        return tri_at(patch[w], 0, n - k);
    };
    auto side_of = [&](int w, int e) {
        for (int s = 0; s < 3; ++s)
            if (t.wedge_edges_of[w][s] == e) return s;
        fail(ErrorCode::BadInput, "edge not incident to wedge");
    };

    // Grid vertices per tree edge, g(c, r): c runs along the edge, r across.
    // End columns are identified with patch sides; the reversal at the far
    // end keeps all face orientations consistent.
    std::vector<std::vector<VertexId>> grid(t.num_edges());
    for (int e = 0; e < t.num_edges(); ++e) {
        auto [u, v] = t.edges[e];
        grid[e].assign((n + 1) * (n + 1), kNone);
        for (int c = 0; c <= n; ++c) {
            for (int r = 0; r <= n; ++r) {
                VertexId id;
                if (c == 0 && t.is_wedge[u])
                    id = side_vertex(u, side_of(u, e), r);
                else if (c == n && t.is_wedge[v])
                    id = side_vertex(v, side_of(v, e), n - r);
                else
                    id = b.add_vertex();
                grid[e][c * (n + 1) + r] = id;
            }
        }
    }
    auto g_at = [&](int e, int c, int r) { return grid[e][c * (n + 1) + r]; };

    // Faces: junction patches first, then the grids.
    for (int w = 0; w < t.num_vertices; ++w) {
        if (!t.is_wedge[w]) continue;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n - i; ++j)
                b.add_face({tri_at(patch[w], i, j), tri_at(patch[w], i + 1, j),
                            tri_at(patch[w], i, j + 1)});
        for (int i = 0; i + 1 < n; ++i)
            for (int j = 0; j + 1 < n - i; ++j)
                b.add_face({tri_at(patch[w], i + 1, j), tri_at(patch[w], i + 1, j + 1),
                            tri_at(patch[w], i, j + 1)});
    }
    for (int e = 0; e < t.num_edges(); ++e)
        for (int c = 0; c < n; ++c)
            for (int r = 0; r < n; ++r)
                b.add_face({g_at(e, c, r), g_at(e, c + 1, r), g_at(e, c + 1, r + 1),
                            g_at(e, c, r + 1)});

    // Junction spurs: lattice paths from each side's landing vertex (side
    // index floor(n/2)) to the patch centre vertex (m0, m0), pairwise disjoint
    // except at the centre. Routed by BFS avoiding earlier spurs and the
    // other landings.
    std::vector<std::array<std::vector<VertexId>, 3>> spur(t.num_vertices);
    for (int w = 0; w < t.num_vertices; ++w) {
        if (!t.is_wedge[w]) continue;
        const VertexId centre = tri_at(patch[w], m0, m0);
        std::vector<char> blocked; // by local patch index
        blocked.assign((n + 1) * (n + 1), 0);
        for (int s = 0; s < 3; ++s) {
            VertexId landing = side_vertex(w, s, m0);
            // BFS in patch coordinates from landing to centre.
            std::vector<int> from((n + 1) * (n + 1), -2);
            auto idx_of = [&](VertexId id) {
                for (int i = 0; i <= n; ++i)
                    for (int j = 0; j <= n - i; ++j)
                        if (patch[w][i * (n + 1) + j] == id) return i * (n + 1) + j;
                fail(ErrorCode::BadInput, "vertex not in patch");
            };
            int start = idx_of(landing), goal = idx_of(centre);
            std::vector<char> avoid = blocked;
            for (int s2 = 0; s2 < 3; ++s2)
                if (s2 != s) avoid[idx_of(side_vertex(w, s2, m0))] = 1;
            avoid[goal] = 0;
            avoid[start] = 0;
            std::vector<int> queue = {start};
            from[start] = -1;
            static const int di[] = {1, -1, 0, 0, 1, -1};
            static const int dj[] = {0, 0, 1, -1, -1, 1};
            for (size_t qi = 0; qi < queue.size() && from[goal] == -2; ++qi) {
                int cur = queue[qi];
                int ci = cur / (n + 1), cj = cur % (n + 1);
                for (int dir = 0; dir < 6; ++dir) {
                    int ni = ci + di[dir], nj = cj + dj[dir];
                    if (ni < 0 || nj < 0 || ni + nj > n) continue;
                    int nk = ni * (n + 1) + nj;
                    if (avoid[nk] || from[nk] != -2) continue;
                    from[nk] = cur;
                    queue.push_back(nk);
                }
            }
            require(from[goal] != -2 || start == goal, ErrorCode::BadInput,
                    "junction spur routing failed");
            std::vector<int> rev;
            for (int cur = goal; cur != -1; cur = from[cur]) rev.push_back(cur);
            std::reverse(rev.begin(), rev.end()); // landing .. centre
            for (int k : rev) {
                if (k != goal) blocked[k] = 1;
                spur[w][s].push_back(patch[w][k]);
            }
        }
    }

    // Inscribed paths: centre line of each grid at row m0, jogging one step
    // up the far end column when n is odd so both ends land at side index m0,
    // extended by the junction spurs.
    L.map.level = t.level;
    L.map.vertices_of.resize(t.num_edges());
    L.map.edges_of.resize(t.num_edges());
    L.map.image_of_vertex.assign(t.num_vertices, kNone);
    for (int e = 0; e < t.num_edges(); ++e) {
        auto [u, v] = t.edges[e];
        std::vector<VertexId> path;
        if (t.is_wedge[u]) {
            const auto& sp = spur[u][side_of(u, e)];
            path.assign(sp.rbegin(), sp.rend()); // centre .. landing
            path.pop_back();                     // landing re-added below
        }
        for (int c = 0; c <= n; ++c) path.push_back(g_at(e, c, m0));
        if (t.is_wedge[v]) {
            if (n % 2 == 1) path.push_back(g_at(e, n, n - m0)); // jog to the landing
            const auto& sp = spur[v][side_of(v, e)];
            path.insert(path.end(), sp.begin() + 1, sp.end());
        }
        for (size_t i = 0; i + 1 < path.size(); ++i)
            L.map.edges_of[e].push_back(b.edge_between(path[i], path[i + 1]));

        // Half-open convention: junction centres belong to the owning edge.
        std::vector<VertexId> verts = path;
        if (t.is_wedge[v] && t.vertex_owner[v] != e) verts.pop_back();
        if (t.is_wedge[u] && t.vertex_owner[u] != e) verts.erase(verts.begin());
        L.map.vertices_of[e] = std::move(verts);

        if (!t.is_wedge[u] && L.map.image_of_vertex[u] == kNone)
            L.map.image_of_vertex[u] = g_at(e, 0, m0);
        if (!t.is_wedge[v] && L.map.image_of_vertex[v] == kNone)
            L.map.image_of_vertex[v] = g_at(e, n, t.is_wedge[v] ? n - m0 : m0);
    }
    for (int w = 0; w < t.num_vertices; ++w)
        if (t.is_wedge[w]) L.map.image_of_vertex[w] = tri_at(patch[w], m0, m0);
    return L;
}

// Concentric pentagon rings glued inside the given outer circuit, halving the
// boundary per ring down to an innermost 4-circuit. Pentagons have two outer
// edges, one inner edge and two radial edges; for k below the enclosing power
// of two, 2^m - k evenly spread pentagons of the first ring lose their
// degree-2 outer vertex and become squares.
struct SkirtStats {
    std::vector<VertexId> inner_circuit;
    int rings = 0;
    int pentagons = 0;
    int squares = 0;
};

inline SkirtStats add_pentagon_rings(ComplexBuilder& b, const std::vector<VertexId>& outer) {
    const int k = static_cast<int>(outer.size());
    require(k >= 5, ErrorCode::KTooSmall, "annulus needs outer boundary of length >= 5");
    int m = 3;
    while ((1 << m) < k) ++m;
    const int merges = (1 << m) - k;

    SkirtStats stats;
    std::vector<VertexId> circle = outer; // current outer circle, cyclic order
    int P = 1 << (m - 1);                 // pentagons in the current ring
    bool first_ring = true;
    while (true) {
        std::vector<char> merged(P, 0);
        if (first_ring) {
            for (int tmerge = 0; tmerge < merges; ++tmerge)
                merged[static_cast<int>(static_cast<long long>(tmerge) * P / merges)] = 1;
        }
        std::vector<VertexId> inner(P);
        for (int i = 0; i < P; ++i) inner[i] = b.add_vertex();

        int pos = 0;
        for (int i = 0; i < P; ++i) {
            VertexId ui = circle[pos];
            std::vector<VertexId> cycle;
            if (merged[i]) {
                cycle = {ui, circle[(pos + 1) % circle.size()], inner[(i + 1) % P], inner[i]};
                pos += 1;
                stats.squares++;
            } else {
                cycle = {ui, circle[(pos + 1) % circle.size()], circle[(pos + 2) % circle.size()],
                         inner[(i + 1) % P], inner[i]};
                pos += 2;
                stats.pentagons++;
            }
            b.add_face(cycle);
        }
        require(pos == static_cast<int>(circle.size()), ErrorCode::BadInput,
                "ring consumed the wrong number of outer vertices");
        stats.rings++;
        circle = std::move(inner);
        first_ring = false;
        if (P == 4) break;
        P /= 2;
    }
    stats.inner_circuit = std::move(circle);
    return stats;
}

} // namespace detail

// An annular pentagon complex D_k with outer boundary of length exactly k.
struct AnnularComplex {
    PlanarComplex complex;
    FaceId outer_face = kNone;
    FaceId hole_face = kNone;
    std::vector<VertexId> outer_circuit;
    std::vector<VertexId> inner_circuit;
    int rings = 0;
    int pentagons = 0;
    int squares = 0;
};

inline AnnularComplex pentagon_annulus(int k) {
    require(k >= 5, ErrorCode::KTooSmall, "D_k needs k >= 5");
    ComplexBuilder b;
    std::vector<VertexId> outer(k);
    for (int i = 0; i < k; ++i) outer[i] = b.add_vertex();
    auto stats = detail::add_pentagon_rings(b, outer);
    auto raw = b.build_raw();

    AnnularComplex d;
    d.complex = std::move(raw.complex);
    require(raw.unfilled.size() == 2, ErrorCode::BadInput, "annulus must have two unfilled faces");
    for (FaceId f : raw.unfilled) {
        if (d.complex.face_degree(f) == k && d.outer_face == kNone)
            d.outer_face = f;
        else
            d.hole_face = f;
    }
    require(d.outer_face != kNone && d.hole_face != kNone &&
                d.complex.face_degree(d.hole_face) == 4,
            ErrorCode::BadInput, "unexpected annulus boundary degrees");
    d.outer_circuit = std::move(outer);
    d.inner_circuit = std::move(stats.inner_circuit);
    d.rings = stats.rings;
    d.pentagons = stats.pentagons;
    d.squares = stats.squares;
    return d;
}

// The fattened tree A_n as a diagram, with its inscribed tree map and
// boundary circuit (in boundary-walk order).
struct FattenedTree {
    Diagram diagram;
    InscribedTreeMap map;
    std::vector<VertexId> boundary_circuit;
};

inline FattenedTree fatten(const AbstractTrivalentTree& t, int n) {
    require(t.level == n, ErrorCode::LevelMismatch, "tree level does not match n");
    auto layout = detail::build_fattened_tree(t, n);
    auto raw = layout.builder.build_raw();
    require(raw.unfilled.size() == 1, ErrorCode::BadInput, "fattened tree is not a disc");
    FaceId outer = raw.unfilled.front();

    FattenedTree out;
    std::vector<DartId> orbit = raw.complex.face_orbit(outer);
    out.boundary_circuit.reserve(orbit.size());
    for (DartId d : orbit) out.boundary_circuit.push_back(raw.complex.origin(d));
    {
        std::vector<VertexId> sorted = out.boundary_circuit;
        std::sort(sorted.begin(), sorted.end());
        require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
                ErrorCode::BadInput, "fattened tree boundary is not a simple circuit");
    }
    VertexId base = out.boundary_circuit.front();
    out.diagram = Diagram(std::move(raw.complex), outer, base);
    out.map = std::move(layout.map);
    return out;
}

// The disc diagram Delta_n: A_n glued into the outer circuit of the skirt
// B_n = D_{p_n}; the diagram boundary is the skirt's innermost 4-circuit and
// the base vertex is its first vertex in canonical order.
struct DeltaDiagram {
    Diagram diagram;
    InscribedTreeMap map;
    AbstractTrivalentTree tree;
    int n = 0;
    int lambda = 0;          // max 2-cell degree
    long long p_n = 0;       // interface circuit length
    int boundary_len = 0;    // l(boundary of Delta_n)
    std::vector<VertexId> interface_circuit; // image of the A_n boundary
    int skirt_rings = 0;
};

inline DeltaDiagram assemble_delta(int n, std::optional<uint64_t> choice_seed = {}) {
    require(n >= 1, ErrorCode::BadInput, "Delta_n needs n >= 1");
    DeltaDiagram out;
    out.n = n;
    out.tree = trivalent_tree(n, choice_seed);
    out.p_n = boundary_length_formula(n);

    FattenedTree fat = fatten(out.tree, n);
    require(static_cast<long long>(fat.boundary_circuit.size()) == out.p_n, ErrorCode::BadInput,
            "fattened boundary length disagrees with the closed formula");

    // Rebuild the identical fattening layout and extend it with the skirt;
    // vertex and edge ids of the A_n part carry over unchanged, so the
    // inscribed map stays valid in Delta_n.
    auto layout = detail::build_fattened_tree(out.tree, n);
    auto stats = detail::add_pentagon_rings(layout.builder, fat.boundary_circuit);
    auto built = layout.builder.build(stats.inner_circuit.front());

    out.diagram = std::move(built.diagram);
    out.map = std::move(fat.map);
    out.lambda = out.diagram.max_cell_degree();
    out.boundary_len = out.diagram.boundary_length();
    require(out.boundary_len == 4, ErrorCode::BadInput, "Delta_n boundary must be the 4-circuit");
    out.interface_circuit = std::move(fat.boundary_circuit);
    out.skirt_rings = stats.rings;
    return out;
}

} // namespace planar
