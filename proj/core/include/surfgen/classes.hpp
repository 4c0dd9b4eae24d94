#pragma once

#include "surfgen/embedded_map.hpp"

namespace surfgen {

// Nested hierarchy of embedding classes: polyhedral => closed 2-cell =>
// open 2-cell; triangulations are the all-3-faces maps.
enum class EmbeddingClass {
    open_2cell,
    closed_2cell,
    polyhedral,
    triangulation,
};

// Every face a 3-cycle on three distinct vertices, excluding the single
// 3-cycle in the sphere.
bool is_triangulation(const EmbeddedMap& m);
bool is_triangulation(const EmbeddedMap& m, const FaceData& fd);

// Every face boundary walk visits distinct vertices (face closures are
// closed disks).
bool is_closed_2cell(const EmbeddedMap& m);
bool is_closed_2cell(const EmbeddedMap& m, const FaceData& fd);

// Closed 2-cell and any two face closures meet in exactly one edge, exactly
// one vertex, or not at all.
bool is_polyhedral(const EmbeddedMap& m);
bool is_polyhedral(const EmbeddedMap& m, const FaceData& fd);

// Connectivity cross-checks (brute force; maps here are small).
bool is_2connected(const EmbeddedMap& m);
bool is_3connected(const EmbeddedMap& m);

} // namespace surfgen
