#pragma once

#include "surfgen/embedded_map.hpp"

#include <cstdint>
#include <vector>

namespace surfgen {

// The map blown up into flags (vertex-edge-face incidence triples) with three
// fixed-point-free involutions:
//   s0 - same edge and face, other vertex end
//   s1 - same vertex and face, other edge at the corner
//   s2 - same vertex and edge, other face side
// Flag f = 2*dart + side. Orbits of <s1,s2> are vertices, <s0,s2> edges,
// <s0,s1> faces. Two maps are homeomorphic (reflections included) exactly
// when their flag systems are isomorphic.
struct FlagSystem {
    std::vector<std::int32_t> s0, s1, s2;

    int flag_count() const { return static_cast<int>(s0.size()); }
    bool is_connected() const;
    int orbit_count(const std::vector<std::int32_t>& a, const std::vector<std::int32_t>& b) const;
    // Proper 2-coloring with all three involutions color-swapping.
    bool two_colorable() const;
};

FlagSystem flags_of(const EmbeddedMap& m);

// Dedup key: equal byte sequences exactly when the flag systems are
// isomorphic. Built as the lexicographically least breadth-first numbering
// code over all start flags, visiting involutions in the fixed order
// (s0, s1, s2). Entries are single bytes while 4E < 255; a leading width
// byte keeps wider codes unambiguous.
struct CanonicalCode {
    std::vector<std::uint8_t> bytes;

    bool operator==(const CanonicalCode&) const = default;
    auto operator<=>(const CanonicalCode& o) const { return bytes <=> o.bytes; }
    std::uint64_t hash() const;
};

CanonicalCode canonical_code(const EmbeddedMap& m);

// Canonical code plus a rebuilt representative whose vertex numbering, dart
// order and signs are derived from the winning flag numbering alone. Two
// isomorphic inputs produce byte-identical representatives.
struct CanonicalResult {
    CanonicalCode code;
    EmbeddedMap map;
};

CanonicalResult canonical_form(const EmbeddedMap& m);

bool is_isomorphic(const EmbeddedMap& a, const EmbeddedMap& b);

// Rebuilds an embedded map from abstract involution tables (the inverse of
// flags_of up to vertex relabeling and local orientation choices). Used by
// canonical_form and by the triangular-embedding search.
EmbeddedMap map_from_involutions(const std::vector<std::int32_t>& s0,
                                 const std::vector<std::int32_t>& s1,
                                 const std::vector<std::int32_t>& s2);

} // namespace surfgen
