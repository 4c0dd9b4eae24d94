#pragma once

#include "surfgen/embedded_map.hpp"
#include "surfgen/surface.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace surfgen {

// Irreducible-triangulation seeds for one surface plus the irreducible maps
// derived from them by vertex deletion.
struct SeedSet {
    SurfaceClass surface;
    std::vector<EmbeddedMap> triangulations;
    std::vector<EmbeddedMap> irreducible_maps; // filled by derive_irreducible_maps
};

class SeedError : public std::runtime_error {
  public:
    enum class Kind { invariant_violation, surface_mismatch, bootstrap_failure };
    SeedError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

  private:
    Kind kind_;
};

// All embeddings of the graph on `target` in which every face is a 3-face,
// up to isomorphism. Exhaustive backtracking over facial-triangle gluings;
// empty when no triangular embedding exists.
std::vector<EmbeddedMap> triangular_embeddings(int n,
                                               const std::vector<std::pair<Vertex, Vertex>>& edges,
                                               const SurfaceClass& target);

// The one sphere seed: K4, the boundary of the tetrahedron. Its edges are
// contractible but contraction is forbidden there; generation starts from it.
SeedSet sphere_seed();

// The two projective-plane seeds, bootstrapped by embedding search: K6 and
// K7 minus a triangle. Throws SeedError(bootstrap_failure) if either search
// does not produce exactly one irreducible triangulation.
SeedSet projective_seeds();

// Parse and validate a seed catalog: every map must pass validation, be a
// triangulation with no contractible edge, and live on the declared surface.
// Duplicates (by canonical code) are dropped.
SeedSet load_seeds(const std::string& path, const SurfaceClass& declared);
SeedSet load_seeds_stream(std::istream& in, const SurfaceClass& declared);

// Vertex-deletion scan: for every seed and every vertex subset, keep the
// residues that are irreducible maps; dedup by canonical code. Triangulation
// seeds are always part of the result. Exhaustive over all 2^V subsets.
SeedSet derive_irreducible_maps(const SeedSet& seeds);

// Expected catalog sizes for the surfaces with published seed counts;
// 0 when unknown. Used for the CLI's advisory warning.
int expected_seed_count(const SurfaceClass& s);

} // namespace surfgen
