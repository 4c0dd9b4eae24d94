#pragma once

#include "surfgen/embedded_map.hpp"
#include "surfgen/flags.hpp"
#include "surfgen/surface.hpp"

#include <cstdint>
#include <set>
#include <stdexcept>

namespace surfgen {

// Brute-force ground truth for very small vertex counts, independent of the
// generation pipeline: enumerates every connected simple labeled graph, every
// rotation system and every co-tree sign assignment, keeps the embeddings
// landing on the requested surface, and dedups by canonical code.
struct OracleResult {
    SurfaceClass surface;
    int n = 0;
    std::set<CanonicalCode> codes;
    std::uint64_t count() const { return codes.size(); }
};

class OracleBudgetError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Throws OracleBudgetError when the estimated number of candidate embeddings
// exceeds `budget` (all-or-nothing; no silent truncation).
OracleResult enumerate_all_maps(const SurfaceClass& surface, int n,
                                std::uint64_t budget = 200'000'000ull);

} // namespace surfgen
