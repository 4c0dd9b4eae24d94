#pragma once

#include "surfgen/embedded_map.hpp"

#include <array>
#include <stdexcept>

namespace surfgen {

enum class MapErrorCode {
    not_contractible,
    k4_sphere_exception,
    simplicity_violation,
    no_3face_on_edge,
    same_face_both_sides,
    corner_blocked,
    face_not_large,
    not_a_3cycle,
    separating_cycle,
    invalid_corner,
};

class MapError : public std::runtime_error {
  public:
    MapError(MapErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}
    MapErrorCode code() const { return code_; }

  private:
    MapErrorCode code_;
};

// Names the corner v_i v_{i+1} v_{i+2} of a face walk (indices mod size).
struct CornerRef {
    int face = 0;
    int position = 0;
};

struct CycleClass {
    bool one_sided = false;
    bool separating = false;
    bool essential = false;
};

using Cycle3 = std::array<Vertex, 3>;

// True when e lies on exactly two 3-cycles, both of which are faces.
bool is_contractible(const EmbeddedMap& m, EdgeId e);
bool is_contractible(const EmbeddedMap& m, EdgeId e, const FaceData& fd);

// Edge contraction (E-reduction). Requires is_contractible and that the map
// is not K4 in the sphere. V-1, E-3, F-2; surface unchanged.
EmbeddedMap contract_edge(const EmbeddedMap& m, EdgeId e);

// Vertex splitting (E-expansion), inverse of contract_edge. The hinge darts
// at positions p1 != p2 of v's rotation pick the two neighbors that end up
// adjacent to both halves; the arcs between them go one to each half.
// V+1, E+3, F+2; surface unchanged.
EmbeddedMap split_vertex(const EmbeddedMap& m, Vertex v, int p1, int p2);
EmbeddedMap split_vertex(const EmbeddedMap& m, Vertex v, const CornerRef& c1,
                         const CornerRef& c2, const FaceData& fd);

// Edge removal (D-expansion): e must lie on a 3-face and its two face slots
// must be distinct. Merges the faces; E-1, F-1; surface unchanged.
EmbeddedMap remove_edge(const EmbeddedMap& m, EdgeId e);
EmbeddedMap remove_edge(const EmbeddedMap& m, EdgeId e, const FaceData& fd);
bool can_remove_edge(const EmbeddedMap& m, EdgeId e, const FaceData& fd);

// Corner edge addition (D-reduction), inverse of remove_edge. Splits a large
// face at corner i into a 3-face and an (m-1)-face. With v_i = v_{i+2} the
// edge v_{i+1} v_{i+3} is added, otherwise v_i v_{i+2}.
EmbeddedMap add_corner_edge(const EmbeddedMap& m, const CornerRef& c);
EmbeddedMap add_corner_edge(const EmbeddedMap& m, const CornerRef& c, const FaceData& fd);

// Large face in which every v_i is adjacent to (and distinct from) v_{i+2}.
// 3-faces and smaller return false.
bool is_irreducible_face(const EmbeddedMap& m, const FaceWalk& f);

// Every face is a 3-face or an irreducible face.
bool is_face_irreducible(const EmbeddedMap& m);
bool is_face_irreducible(const EmbeddedMap& m, const FaceData& fd);

// Face irreducible with no contractible edge. K4 in the sphere is excluded:
// sphere generation starts from it as the one seed triangulation instead.
bool is_irreducible_map(const EmbeddedMap& m);

// Sidedness from the sign product along the cycle, separation by cutting,
// essential = not bounding a disk on either side.
CycleClass classify_3cycle(const EmbeddedMap& m, const Cycle3& c);

// Cut along a nonseparating 3-cycle and cap the hole(s): a two-sided cut
// caps with two 3-faces (V+3, E+3, Euler genus down 2), a one-sided cut
// with a hexagon filled by a new apex vertex (V+4, E+9, Euler genus down 1).
// Triangulations stay triangulations.
EmbeddedMap cut_and_cap(const EmbeddedMap& m, const Cycle3& c);

// Adds a vertex inside the face and joins it to every corner of the walk,
// splitting the face into size() triangles. Walk vertices must be distinct.
EmbeddedMap fill_face_with_apex(const EmbeddedMap& m, const FaceWalk& walk);

} // namespace surfgen
