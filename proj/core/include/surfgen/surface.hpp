#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace surfgen {

// Closed surface identified by Euler characteristic and orientability.
// Orientable surfaces: chi = 2 - 2g (sphere, torus, ...).
// Nonorientable surfaces: chi = 2 - g (projective plane, Klein bottle, ...).
struct SurfaceClass {
    int chi = 2;
    bool orientable = true;

    constexpr bool operator==(const SurfaceClass&) const = default;

    int genus() const { return orientable ? (2 - chi) / 2 : 2 - chi; }

    // 2 - chi; the scale on which cutting surgery moves.
    int euler_genus() const { return 2 - chi; }

    std::string name() const;

    static SurfaceClass sphere() { return {2, true}; }
    static SurfaceClass projective_plane() { return {1, false}; }
    static SurfaceClass torus() { return {0, true}; }
    static SurfaceClass klein_bottle() { return {0, false}; }

    static SurfaceClass make(int chi, bool orientable) {
        if (chi > 2) throw std::invalid_argument("surface: chi must be <= 2");
        if (orientable && (chi % 2 != 0))
            throw std::invalid_argument("surface: orientable surfaces have even chi");
        return {chi, orientable};
    }
};

inline std::string SurfaceClass::name() const {
    if (*this == sphere()) return "sphere";
    if (*this == projective_plane()) return "projective";
    if (*this == torus()) return "torus";
    if (*this == klein_bottle()) return "klein";
    return (orientable ? "S" : "N") + std::to_string(genus());
}

} // namespace surfgen
