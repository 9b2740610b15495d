#pragma once

#include <algorithm>
#include <vector>

#include "planar/core.hpp"

namespace planar {

// Rotation-system (combinatorial-map) representation of a connected multigraph
// embedded in the sphere/plane. Each dart is a directed half-edge carrying:
//
//   opposite : the other dart of the same edge (fixed-point-free involution)
//   next     : next dart counterclockwise around the origin vertex
//   origin   : the vertex the dart leaves
//
// Faces are the orbits of face_next(d) = next(opposite(d)). Under the
// counterclockwise rotation convention every orbit is a head-to-tail closed
// walk with its face on the walk's right; the orbit of the outer face is the
// anticlockwise walk around the complex, with the complex on its left.
// Planarity is certified by Euler's formula V - E + F = 2 (outer face
// included), which is checked at construction.
struct DartRecord {
    DartId opposite = kNone;
    DartId next = kNone;
    VertexId origin = kNone;
};

class PlanarComplex {
  public:
    PlanarComplex() = default;

    int num_vertices() const { return num_vertices_; }
    int num_darts() const { return static_cast<int>(darts_.size()); }
    int num_edges() const { return num_edges_; }
    int num_faces() const { return num_faces_; }

    DartId opposite(DartId d) const { return darts_[d].opposite; }
    DartId next(DartId d) const { return darts_[d].next; }
    DartId prev(DartId d) const { return prev_[d]; }
    VertexId origin(DartId d) const { return darts_[d].origin; }
    VertexId head(DartId d) const { return darts_[darts_[d].opposite].origin; }

    DartId face_next(DartId d) const { return darts_[darts_[d].opposite].next; }

    EdgeId edge_of(DartId d) const { return dart_edge_[d]; }
    FaceId face_of(DartId d) const { return dart_face_[d]; }

    // Representative darts. edge_dart(e) is the smaller dart of the pair;
    // face_dart(f) is the smallest dart of the orbit, so face ids are stable
    // across serialization round trips.
    DartId edge_dart(EdgeId e) const { return edge_dart_[e]; }
    DartId face_dart(FaceId f) const { return face_dart_[f]; }
    DartId vertex_dart(VertexId v) const { return vertex_dart_[v]; }

    VertexId edge_endpoint(EdgeId e, int side) const {
        DartId d = edge_dart_[e];
        return side == 0 ? origin(d) : head(d);
    }

    // The two faces on either side of an edge (equal for a bridge inside one
    // face region).
    FaceId edge_face(EdgeId e, int side) const {
        DartId d = edge_dart_[e];
        return face_of(side == 0 ? d : darts_[d].opposite);
    }

    int face_degree(FaceId f) const { return face_degree_[f]; }
    int vertex_degree(VertexId v) const { return vertex_degree_[v]; }

    const std::vector<DartRecord>& darts() const { return darts_; }

    // Darts leaving v in rotation order, starting at vertex_dart(v).
    std::vector<DartId> darts_at(VertexId v) const {
        std::vector<DartId> out;
        DartId d0 = vertex_dart_[v];
        if (d0 == kNone) return out;
        DartId d = d0;
        do {
            out.push_back(d);
            d = darts_[d].next;
        } while (d != d0);
        return out;
    }

    // Orbit of face f as a closed head-to-tail dart walk, starting at face_dart(f).
    std::vector<DartId> face_orbit(FaceId f) const {
        std::vector<DartId> out;
        DartId d0 = face_dart_[f];
        DartId d = d0;
        do {
            out.push_back(d);
            d = face_next(d);
        } while (d != d0);
        return out;
    }

    friend PlanarComplex build_complex(int num_vertices, const std::vector<DartRecord>& darts);

  private:
    std::vector<DartRecord> darts_;
    std::vector<DartId> prev_;
    int num_vertices_ = 0;
    int num_edges_ = 0;
    int num_faces_ = 0;
    std::vector<EdgeId> dart_edge_;
    std::vector<FaceId> dart_face_;
    std::vector<DartId> edge_dart_;
    std::vector<DartId> face_dart_;
    std::vector<DartId> vertex_dart_;
    std::vector<int> face_degree_;
    std::vector<int> vertex_degree_;
};

// Validates the dart table, derives edges and faces, and checks the complex
// invariants: fixed-point-free involution, one rotation cycle per vertex,
// connectivity, and Euler characteristic 2. The outer face is not designated
// here; Diagram does that.
inline PlanarComplex build_complex(int num_vertices, const std::vector<DartRecord>& darts) {
    const int nd = static_cast<int>(darts.size());
    require(num_vertices >= 1, ErrorCode::BadInput, "need at least one vertex");
    require(nd % 2 == 0, ErrorCode::NonInvolutiveOpposite, "odd number of darts");

    for (int d = 0; d < nd; ++d) {
        const DartRecord& r = darts[d];
        require(r.opposite >= 0 && r.opposite < nd, ErrorCode::NonInvolutiveOpposite,
                "opposite out of range");
        require(r.opposite != d, ErrorCode::NonInvolutiveOpposite,
                "opposite has a fixed point at dart " + std::to_string(d));
        require(darts[r.opposite].opposite == d, ErrorCode::NonInvolutiveOpposite,
                "opposite is not an involution at dart " + std::to_string(d));
        require(r.next >= 0 && r.next < nd, ErrorCode::BrokenRotation, "next out of range");
        require(r.origin >= 0 && r.origin < num_vertices, ErrorCode::BadInput,
                "origin out of range");
        require(darts[r.next].origin == r.origin, ErrorCode::BrokenRotation,
                "next leaves the origin vertex at dart " + std::to_string(d));
    }

    // next must be a permutation whose restriction to each vertex is a single cycle.
    std::vector<int> next_seen(nd, 0);
    for (int d = 0; d < nd; ++d) next_seen[darts[d].next]++;
    for (int d = 0; d < nd; ++d)
        require(next_seen[d] == 1, ErrorCode::BrokenRotation, "next is not a permutation");

    PlanarComplex c;
    c.darts_ = darts;
    c.num_vertices_ = num_vertices;

    c.vertex_dart_.assign(num_vertices, kNone);
    c.vertex_degree_.assign(num_vertices, 0);
    for (int d = 0; d < nd; ++d) {
        VertexId v = darts[d].origin;
        if (c.vertex_dart_[v] == kNone) c.vertex_dart_[v] = d;
        c.vertex_degree_[v]++;
    }

    // Each vertex's rotation must be one cycle over exactly its own darts.
    {
        std::vector<char> visited(nd, 0);
        for (VertexId v = 0; v < num_vertices; ++v) {
            DartId d0 = c.vertex_dart_[v];
            if (d0 == kNone) {
                require(num_vertices == 1 && nd == 0, ErrorCode::Disconnected,
                        "dartless vertex " + std::to_string(v) + " in a nonempty complex");
                continue;
            }
            int cycle_len = 0;
            DartId d = d0;
            do {
                require(!visited[d], ErrorCode::BrokenRotation, "rotation cycles overlap");
                visited[d] = 1;
                cycle_len++;
                d = darts[d].next;
            } while (d != d0);
            require(cycle_len == c.vertex_degree_[v], ErrorCode::BrokenRotation,
                    "rotation at vertex " + std::to_string(v) + " is not a single cycle");
        }
    }

    c.prev_.assign(nd, kNone);
    for (int d = 0; d < nd; ++d) c.prev_[darts[d].next] = d;

    // Edges: dart pairs under the involution, numbered by first appearance.
    c.dart_edge_.assign(nd, kNone);
    for (int d = 0; d < nd; ++d) {
        if (c.dart_edge_[d] != kNone) continue;
        EdgeId e = c.num_edges_++;
        c.dart_edge_[d] = e;
        c.dart_edge_[darts[d].opposite] = e;
        c.edge_dart_.push_back(d);
    }

    // Connectivity over the 1-skeleton.
    {
        std::vector<char> seen(num_vertices, 0);
        std::vector<VertexId> stack = {0};
        seen[0] = 1;
        int count = 1;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            DartId d0 = c.vertex_dart_[v];
            if (d0 == kNone) continue;
            DartId d = d0;
            do {
                VertexId w = c.head(d);
                if (!seen[w]) {
                    seen[w] = 1;
                    count++;
                    stack.push_back(w);
                }
                d = darts[d].next;
            } while (d != d0);
        }
        require(count == num_vertices, ErrorCode::Disconnected, "1-skeleton is not connected");
    }

    // Faces: orbits of face_next, numbered by smallest dart so ids are
    // canonical for a given dart table.
    c.dart_face_.assign(nd, kNone);
    for (int d = 0; d < nd; ++d) {
        if (c.dart_face_[d] != kNone) continue;
        FaceId f = c.num_faces_++;
        c.face_dart_.push_back(d);
        int deg = 0;
        DartId x = d;
        do {
            c.dart_face_[x] = f;
            deg++;
            x = c.face_next(x);
        } while (x != d);
        c.face_degree_.push_back(deg);
    }
    if (nd == 0) {
        // A bare vertex: one (outer) face, Euler 1 - 0 + 1 = 2.
        c.num_faces_ = 1;
        c.face_dart_.push_back(kNone);
        c.face_degree_.push_back(0);
    }

    const int euler = num_vertices - c.num_edges_ + c.num_faces_;
    require(euler == 2, ErrorCode::NonPlanarEuler,
            "V - E + F = " + std::to_string(euler) + ", expected 2");
    return c;
}

// A diagram: a planar complex with a designated outer face and a base vertex
// on the outer boundary. Every bounded face is read as a 2-cell.
struct Diagram {
    PlanarComplex complex;
    FaceId outer_face = kNone;
    VertexId base = kNone;

    Diagram() = default;
    Diagram(PlanarComplex c, FaceId outer, VertexId star)
        : complex(std::move(c)), outer_face(outer), base(star) {
        require(outer_face >= 0 && outer_face < complex.num_faces(), ErrorCode::BadInput,
                "outer face id out of range");
        require(base >= 0 && base < complex.num_vertices(), ErrorCode::BadInput,
                "base vertex out of range");
        require(complex.num_darts() == 0 || base_on_outer(), ErrorCode::BaseNotOnBoundary,
                "base vertex is not incident to the outer face");
    }

    int area() const { return complex.num_faces() - 1; }

    // Max degree over bounded faces (lambda in cell-degree bounds).
    int max_cell_degree() const {
        int m = 0;
        for (FaceId f = 0; f < complex.num_faces(); ++f)
            if (f != outer_face) m = std::max(m, complex.face_degree(f));
        return m;
    }

    int boundary_length() const { return complex.face_degree(outer_face); }

  private:
    bool base_on_outer() const {
        for (DartId d : complex.face_orbit(outer_face))
            if (complex.origin(d) == base) return true;
        return false;
    }
};

// A head-to-tail dart walk. length() counts edges with multiplicity.
struct Walk {
    std::vector<DartId> darts;
    int length() const { return static_cast<int>(darts.size()); }
};

// The anticlockwise closed boundary walk of the diagram with origin base,
// following the attaching map of the outer face. Edges in face-free portions
// of the complex appear twice. Starts at the smallest outer dart leaving base.
inline Walk boundary_walk(const Diagram& d) {
    const PlanarComplex& c = d.complex;
    Walk w;
    if (c.num_darts() == 0) return w;
    DartId start = kNone;
    for (DartId x : c.face_orbit(d.outer_face)) {
        if (c.origin(x) == d.base && (start == kNone || x < start)) start = x;
    }
    require(start != kNone, ErrorCode::BaseNotOnBoundary, "base vertex not on the outer walk");
    DartId x = start;
    do {
        w.darts.push_back(x);
        x = c.face_next(x);
    } while (x != start);
    return w;
}

// Degree of a bounded face (number of darts in its attaching walk).
inline int face_degree(const Diagram& d, FaceId f) {
    require(f >= 0 && f < d.complex.num_faces(), ErrorCode::BadInput, "face id out of range");
    require(f != d.outer_face, ErrorCode::OuterFaceQueried,
            "outer face queried; use boundary_walk");
    return d.complex.face_degree(f);
}

} // namespace planar
