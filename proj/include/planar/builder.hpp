#pragma once

#include <map>
#include <utility>
#include <vector>

#include "planar/core.hpp"
#include "planar/planar_complex.hpp"

namespace planar {

// Assembles a planar complex from 2-cells given as vertex cycles, plus
// optional face-free (bare) edges for pendant portions. Cycles are given
// counterclockwise: walking the cycle, the face interior is on the left.
//
// The rotation system is derived, not supplied: every corner of every face
// pins one rotation link at its vertex, and at boundary vertices the single
// remaining gap is closed. Edge instance e owns darts 2e (u -> v) and 2e+1
// (v -> u), so dart and edge numbering is a deterministic function of
// insertion order. build() funnels through build_complex, so any
// inconsistency in the supplied faces (orientation clashes, non-disc gluing,
// pinched rotations) fails validation loudly.
class ComplexBuilder {
  public:
    VertexId add_vertex() {
        return num_vertices_++;
    }

    void ensure_vertices(int n) { num_vertices_ = std::max(num_vertices_, n); }
    int num_vertices() const { return num_vertices_; }

    EdgeId add_edge(VertexId u, VertexId v) {
        require(u >= 0 && u < num_vertices_ && v >= 0 && v < num_vertices_, ErrorCode::BadInput,
                "edge endpoint out of range");
        EdgeId e = static_cast<EdgeId>(edges_.size());
        edges_.push_back({u, v});
        dart_used_.push_back(false);
        dart_used_.push_back(false);
        instances_[key(u, v)].push_back(e);
        return e;
    }

    // The directed dart of instance e running a -> b.
    DartId dart(EdgeId e, VertexId a, VertexId b) const {
        const auto& [u, v] = edges_[e];
        if (a == u && b == v) return 2 * e;
        require(a == v && b == u, ErrorCode::BadInput, "dart endpoints do not match edge");
        return 2 * e + 1;
    }

    // Face as a counterclockwise vertex cycle. Edge instances are reused when
    // an existing instance still has the needed side free; otherwise a new
    // parallel instance is created. Use add_face_edges for explicit control.
    FaceId add_face(const std::vector<VertexId>& ccw_cycle) {
        const int k = static_cast<int>(ccw_cycle.size());
        require(k >= 1, ErrorCode::BadInput, "empty face cycle");
        std::vector<std::pair<EdgeId, bool>> sides;
        sides.reserve(k);
        for (int i = 0; i < k; ++i) {
            VertexId a = ccw_cycle[i];
            VertexId b = ccw_cycle[(i + 1) % k];
            EdgeId e = find_or_add_edge_with_free_dart(b, a);
            sides.push_back({e, edges_[e].first == a});
        }
        return add_face_edges(sides);
    }

    // Face as explicit (edge instance, runs u->v along the cycle?) sides,
    // counterclockwise. Head-to-tail consistency is checked.
    FaceId add_face_edges(const std::vector<std::pair<EdgeId, bool>>& ccw_sides) {
        const int k = static_cast<int>(ccw_sides.size());
        require(k >= 1, ErrorCode::BadInput, "empty face cycle");
        std::vector<DartId> orbit;
        orbit.reserve(k);
        // The attaching orbit traverses the cycle clockwise (face on the
        // orbit's right), so claim the reverse dart of each side, in reverse
        // cycle order.
        for (int i = k - 1; i >= 0; --i) {
            auto [e, forward] = ccw_sides[i];
            require(e >= 0 && e < static_cast<EdgeId>(edges_.size()), ErrorCode::BadInput,
                    "edge instance out of range");
            DartId d = forward ? 2 * e + 1 : 2 * e;
            require(!dart_used_[d], ErrorCode::BadInput,
                    "edge side already attached to another face");
            dart_used_[d] = true;
            orbit.push_back(d);
        }
        for (int i = 0; i < k; ++i) {
            VertexId tail_head = dart_head(orbit[i]);
            VertexId next_orig = dart_origin(orbit[(i + 1) % k]);
            require(tail_head == next_orig, ErrorCode::BadInput,
                    "face cycle is not head-to-tail");
        }
        faces_.push_back(orbit);
        return static_cast<FaceId>(faces_.size()) - 1;
    }

    // A face-free edge (pendant portions and lone edges). Its darts are placed
    // in the outer gap of the rotation at each endpoint.
    EdgeId add_bare_edge(VertexId u, VertexId v) { return add_edge(u, v); }

    EdgeId edge_between(VertexId u, VertexId v) const {
        auto it = instances_.find(key(u, v));
        require(it != instances_.end() && !it->second.empty(), ErrorCode::BadInput,
                "no edge between requested vertices");
        return it->second.front();
    }

    int num_edge_instances() const { return static_cast<int>(edges_.size()); }

    struct BuildResult {
        Diagram diagram;
        // Canonical face id of each added face, by insertion order.
        std::vector<FaceId> face_ids;
    };

    // Derives the rotation system, validates via build_complex, and returns a
    // diagram based at `base`. Exactly one derived face must be unaccounted
    // for by the added 2-cells; it becomes the outer face.
    BuildResult build(VertexId base) const {
        const int nd = 2 * static_cast<int>(edges_.size());
        std::vector<DartRecord> recs(nd);
        for (EdgeId e = 0; e < static_cast<EdgeId>(edges_.size()); ++e) {
            recs[2 * e] = {2 * e + 1, kNone, edges_[e].first};
            recs[2 * e + 1] = {2 * e, kNone, edges_[e].second};
        }

        // Pin rotation links from face corners: consecutive orbit darts a,b
        // satisfy next(opposite(a)) = b.
        std::vector<DartId> pinned_next(nd, kNone);
        std::vector<char> is_link_target(nd, 0);
        for (const auto& orbit : faces_) {
            const int k = static_cast<int>(orbit.size());
            for (int i = 0; i < k; ++i) {
                DartId a = orbit[i];
                DartId b = orbit[(i + 1) % k];
                DartId from = recs[a].opposite;
                require(pinned_next[from] == kNone || pinned_next[from] == b, ErrorCode::BadInput,
                        "conflicting rotation pins; faces are not consistently oriented");
                if (pinned_next[from] == kNone) {
                    pinned_next[from] = b;
                    is_link_target[b] = 1;
                }
            }
        }

        // Close each vertex's rotation. Pinned links form chains; chain heads
        // are darts that are not a pin target. Chains (and isolated bare
        // darts) are concatenated in order of their smallest head dart.
        std::vector<std::vector<DartId>> at_vertex(num_vertices_);
        for (DartId d = 0; d < nd; ++d) at_vertex[recs[d].origin].push_back(d);
        for (VertexId v = 0; v < num_vertices_; ++v) {
            const auto& dv = at_vertex[v];
            if (dv.empty()) continue;
            std::vector<DartId> heads;
            for (DartId d : dv)
                if (!is_link_target[d]) heads.push_back(d);
            if (heads.empty()) {
                // Fully pinned: must already be a single cycle; leave as is
                // and let build_complex verify.
                for (DartId d : dv)
                    if (pinned_next[d] != kNone) recs[d].next = pinned_next[d];
                continue;
            }
            for (size_t i = 0; i < heads.size(); ++i) {
                DartId d = heads[i];
                while (pinned_next[d] != kNone) {
                    recs[d].next = pinned_next[d];
                    d = pinned_next[d];
                }
                recs[d].next = heads[(i + 1) % heads.size()];
            }
        }

        PlanarComplex complex = build_complex(std::max(num_vertices_, 1), recs);

        std::vector<FaceId> face_ids;
        face_ids.reserve(faces_.size());
        std::vector<char> claimed(complex.num_faces(), 0);
        for (const auto& orbit : faces_) {
            FaceId f = complex.face_of(orbit.front());
            require(!claimed[f], ErrorCode::BadInput, "two added faces share a derived orbit");
            require(complex.face_degree(f) == static_cast<int>(orbit.size()), ErrorCode::BadInput,
                    "derived face degree does not match added cycle");
            claimed[f] = 1;
            face_ids.push_back(f);
        }
        FaceId outer = kNone;
        for (FaceId f = 0; f < complex.num_faces(); ++f) {
            if (!claimed[f]) {
                require(outer == kNone, ErrorCode::BadInput,
                        "complex has more than one unfilled face; not a diagram");
                outer = f;
            }
        }
        require(outer != kNone, ErrorCode::BadInput, "no unfilled face left for the outer face");
        return BuildResult{Diagram(std::move(complex), outer, base), std::move(face_ids)};
    }

  private:
    static std::pair<VertexId, VertexId> key(VertexId u, VertexId v) {
        return {std::min(u, v), std::max(u, v)};
    }

    VertexId dart_origin(DartId d) const {
        return d % 2 == 0 ? edges_[d / 2].first : edges_[d / 2].second;
    }
    VertexId dart_head(DartId d) const {
        return d % 2 == 0 ? edges_[d / 2].second : edges_[d / 2].first;
    }

    // An instance of {a,b} whose dart a->b is still free, else a new instance.
    EdgeId find_or_add_edge_with_free_dart(VertexId a, VertexId b) {
        auto it = instances_.find(key(a, b));
        if (it != instances_.end()) {
            for (EdgeId e : it->second) {
                if (!dart_used_[dart(e, a, b)]) return e;
            }
        }
        return add_edge(a, b);
    }

    int num_vertices_ = 0;
    std::vector<std::pair<VertexId, VertexId>> edges_;
    std::vector<char> dart_used_;
    std::map<std::pair<VertexId, VertexId>, std::vector<EdgeId>> instances_;
    std::vector<std::vector<DartId>> faces_; // attaching orbits, insertion order
};

} // namespace planar
