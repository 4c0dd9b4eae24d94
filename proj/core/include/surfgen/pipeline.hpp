#pragma once

#include "surfgen/embedded_map.hpp"
#include "surfgen/seeds.hpp"
#include "surfgen/surface.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <vector>

namespace surfgen {

enum class ClassFilter {
    all,
    closed_2cell,
    polyhedral,
    triangulation,
    face_irreducible,
    irreducible,
};

struct GenerationConfig {
    SurfaceClass surface;
    int n_min = 3;
    int n_max = 3;
    ClassFilter filter = ClassFilter::all;
    SeedSet seeds;
    bool deterministic = false;
    int threads = 1;
    std::uint64_t level_cap_bytes = 0; // 0 = unlimited
};

// One table row: the nested class counts at a fixed vertex count, column
// order matching the reported tables (irreducible | face irreducible | maps).
struct CountRow {
    std::uint64_t irr_tri = 0, irr_closed = 0, irr_open = 0;
    std::uint64_t fi_tri = 0, fi_closed = 0, fi_open = 0;
    std::uint64_t poly = 0, closed = 0, open = 0;

    std::uint64_t for_filter(ClassFilter f) const;
    bool operator==(const CountRow&) const = default;
};

struct CountTable {
    SurfaceClass surface;
    int n_min = 0, n_max = -1;
    std::vector<CountRow> rows;

    CountRow& row(int n) { return rows.at(n - n_min); }
    const CountRow& row(int n) const { return rows.at(n - n_min); }
    void render(std::ostream& out, ClassFilter filter = ClassFilter::all) const;
};

class ResourceLimitError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

using MapSink = std::function<void(const EmbeddedMap&, int n)>;

struct GenerateStats {
    CountTable table;
    std::uint64_t emitted = 0;
};

// Runs the pipeline stages the requested class needs and streams each map in
// the class exactly once (canonical representatives). The returned table is
// fully populated for ClassFilter::all; for a narrower filter only that
// class's column is meaningful. cfg.seeds must carry the triangulation seeds
// for cfg.surface; the irreducible-map derivation runs on demand.
GenerateStats generate(const GenerationConfig& cfg, const MapSink& sink = {});

// Full table over cfg.n_min..n_max (forces ClassFilter::all).
CountTable count_table(const GenerationConfig& cfg);

} // namespace surfgen
