#pragma once

#include "surfgen/surface.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace surfgen {

using Vertex = std::int32_t;
using Dart = std::int32_t;   // 2E darts, densely numbered; mate(d) = d ^ 1
using EdgeId = std::int32_t; // edge(d) = d >> 1

// A graph embedded in a surface, given as a signed rotation system:
// a cyclic order of darts around each vertex plus a sign per edge telling
// whether the local orientations of its two ends agree (+1) or not (-1).
// Instances are immutable; every operation builds a new map.
class EmbeddedMap {
  public:
    // rotations[v] lists the neighbors of v in cyclic order; twisted lists
    // the endpoint pairs of the edges with signature -1.
    // Throws std::invalid_argument if the lists cannot be paired into edges
    // or a twisted pair is not an edge. Simplicity/connectivity are *not*
    // enforced here; validate_map reports them.
    static EmbeddedMap from_rotations(const std::vector<std::vector<Vertex>>& rotations,
                                      const std::vector<std::pair<Vertex, Vertex>>& twisted = {});

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(sign_.size()); }
    int dart_count() const { return 2 * edge_count(); }

    Dart mate(Dart d) const { return d ^ 1; }
    EdgeId edge_of(Dart d) const { return d >> 1; }
    Vertex vertex_of(Dart d) const { return vertex_of_[d]; }
    Vertex head_of(Dart d) const { return vertex_of_[d ^ 1]; }

    int degree(Vertex v) const { return rot_start_[v + 1] - rot_start_[v]; }
    Dart rotation_dart(Vertex v, int pos) const { return rot_[rot_start_[v] + pos]; }
    int position_of(Dart d) const { return pos_of_[d]; }

    Dart succ(Dart d) const {
        Vertex v = vertex_of_[d];
        int p = pos_of_[d] + 1;
        if (p == degree(v)) p = 0;
        return rot_[rot_start_[v] + p];
    }
    Dart pred(Dart d) const {
        Vertex v = vertex_of_[d];
        int p = pos_of_[d];
        p = (p == 0 ? degree(v) : p) - 1;
        return rot_[rot_start_[v] + p];
    }

    int sign(EdgeId e) const { return sign_[e]; }
    std::pair<Vertex, Vertex> edge_ends(EdgeId e) const {
        return {vertex_of_[2 * e], vertex_of_[2 * e + 1]};
    }

    // Dart from u to v, or -1 if u and v are not adjacent (first match).
    Dart dart_between(Vertex u, Vertex v) const;
    bool adjacent(Vertex u, Vertex v) const { return dart_between(u, v) >= 0; }
    EdgeId edge_between(Vertex u, Vertex v) const {
        Dart d = dart_between(u, v);
        return d < 0 ? -1 : (d >> 1);
    }

    // Neighbor lists in rotation order; the inverse of from_rotations.
    std::vector<std::vector<Vertex>> rotations() const;
    std::vector<std::pair<Vertex, Vertex>> twisted_edges() const;

    bool is_connected() const;
    bool is_simple() const;

    bool operator==(const EmbeddedMap&) const = default;

  private:
    int vertex_count_ = 0;
    std::vector<Dart> rot_;          // concatenated rotations
    std::vector<std::int32_t> rot_start_; // vertex -> offset, size V+1
    std::vector<Vertex> vertex_of_;  // dart -> tail vertex
    std::vector<std::int32_t> pos_of_;    // dart -> position in its rotation
    std::vector<std::int8_t> sign_;  // edge -> +1 / -1
};

// One step of a face boundary walk: the dart traversed tail-to-head and the
// local orientation carried into it (+1 follows rotation successors, -1
// predecessors, flipping at every negative edge).
struct FaceStep {
    Dart dart;
    std::int8_t orient; // +1 or -1
};

struct FaceWalk {
    std::vector<FaceStep> steps;
    int size() const { return static_cast<int>(steps.size()); }
    Vertex vertex_at(const EmbeddedMap& m, int i) const {
        int n = size();
        return m.vertex_of(steps[((i % n) + n) % n].dart);
    }
};

// All faces plus a lookup from flag (= 2*dart + side) to the face containing
// it. The two sides of a dart lie on the two face slots of its edge.
struct FaceData {
    std::vector<FaceWalk> walks;
    std::vector<std::int32_t> face_of_flag; // size 4E

    int face_count() const { return static_cast<int>(walks.size()); }
    int face_left_of(Dart d) const { return face_of_flag[2 * d]; }
    int face_right_of(Dart d) const { return face_of_flag[2 * d + 1]; }
};

FaceData trace_faces(const EmbeddedMap& m);

struct ValidationReport {
    bool simple = false;
    bool connected = false;
    bool darts_consistent = false;
    bool signs_in_domain = false;
    std::vector<std::string> failures;

    bool ok() const { return simple && connected && darts_consistent && signs_in_domain; }
};

ValidationReport validate_map(const EmbeddedMap& m);

// chi = V - E + F with F from face tracing; orientability from a proper
// 2-coloring of the flag graph in which all three involutions swap colors.
SurfaceClass surface_class(const EmbeddedMap& m);

// Reverses the rotation at v and toggles the sign of every edge at v.
// Represents the same embedding (same canonical code).
EmbeddedMap vertex_flip(const EmbeddedMap& m, Vertex v);

enum class DeleteReject {
    accepted,
    empty_result,
    disconnected,
    not_2cell_on_surface,
};

struct DeleteResult {
    std::optional<EmbeddedMap> map;
    DeleteReject reject = DeleteReject::accepted;
    bool accepted() const { return map.has_value(); }
};

// Removes the vertices flagged in `remove` (size V) together with all their
// edges. Accepts only if the residue is connected and still 2-cell on the
// same surface (Euler criterion: surface_class unchanged).
DeleteResult delete_vertices(const EmbeddedMap& m, const std::vector<bool>& remove);

} // namespace surfgen
