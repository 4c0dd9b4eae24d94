#include "surfgen/pipeline.hpp"

#include "surfgen/classes.hpp"
#include "surfgen/flags.hpp"
#include "surfgen/signed_code.hpp"
#include "surfgen/transforms.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <cstring>
#include <map>
#include <mutex>
#include <ostream>
#include <thread>

namespace surfgen {

std::uint64_t CountRow::for_filter(ClassFilter f) const {
    switch (f) {
        case ClassFilter::all: return open;
        case ClassFilter::closed_2cell: return closed;
        case ClassFilter::polyhedral: return poly;
        case ClassFilter::triangulation: return fi_tri;
        case ClassFilter::face_irreducible: return fi_open;
        case ClassFilter::irreducible: return irr_open;
    }
    return 0;
}

void CountTable::render(std::ostream& out, ClassFilter filter) const {
    if (filter == ClassFilter::all) {
        out << "# surface " << surface.name() << "\n";
        out << "# columns: irreducible (tri, closed 2-cell, open 2-cell) | "
               "face irreducible (triangular, closed 2-cell, open 2-cell) | "
               "maps (polyhedral, closed 2-cell, open 2-cell)\n";
        for (int n = n_min; n <= n_max; ++n) {
            const CountRow& r = row(n);
            out << n << "  " << r.irr_tri << " " << r.irr_closed << " " << r.irr_open << "  "
                << r.fi_tri << " " << r.fi_closed << " " << r.fi_open << "  " << r.poly << " "
                << r.closed << " " << r.open << "\n";
        }
    } else {
        out << "# surface " << surface.name() << "\n";
        for (int n = n_min; n <= n_max; ++n)
            out << n << "  " << row(n).for_filter(filter) << "\n";
    }
}

namespace {

constexpr std::uint8_t kFlagTriangulation = 1;
constexpr std::uint8_t kFlagClosed2Cell = 2;
constexpr std::uint8_t kFlagPolyhedral = 4;

std::uint8_t classify_flags(const EmbeddedMap& m) {
    FaceData fd = trace_faces(m);
    std::uint8_t f = 0;
    if (is_triangulation(m, fd)) f |= kFlagTriangulation;
    if (is_closed_2cell(m, fd)) {
        f |= kFlagClosed2Cell;
        if (is_polyhedral(m, fd)) f |= kFlagPolyhedral;
    }
    return f;
}

// Set of canonical codes at one (vertex count, edge count) level, with the
// serialized canonical representative and its class flags alongside. Codes
// and payloads have a fixed size per level, so entries pack flat; the hash
// table keys on the code hash and resolves collisions on the full bytes.
class LevelStore {
  public:
    LevelStore(std::size_t code_size, std::size_t payload_size)
        : code_size_(code_size), payload_size_(payload_size),
          stride_(code_size + payload_size + 1), table_(64, 0) {}

    std::size_t size() const { return count_; }
    std::size_t bytes() const { return arena_.size() + table_.size() * sizeof(std::uint32_t); }

    bool insert_if_absent(const std::uint8_t* code, const std::uint8_t* payload,
                          std::uint8_t flags) {
        if ((count_ + 1) * 10 > table_.size() * 7) grow();
        std::uint64_t h = hash_bytes(code, code_size_);
        std::size_t mask = table_.size() - 1;
        std::size_t i = h & mask;
        while (table_[i] != 0) {
            const std::uint8_t* entry = arena_.data() + (table_[i] - 1) * stride_;
            if (std::memcmp(entry, code, code_size_) == 0) return false;
            i = (i + 1) & mask;
        }
        arena_.insert(arena_.end(), code, code + code_size_);
        arena_.insert(arena_.end(), payload, payload + payload_size_);
        arena_.push_back(flags);
        ++count_;
        table_[i] = static_cast<std::uint32_t>(count_);
        return true;
    }

    const std::uint8_t* code_at(std::size_t idx) const { return arena_.data() + idx * stride_; }
    const std::uint8_t* payload_at(std::size_t idx) const {
        return arena_.data() + idx * stride_ + code_size_;
    }
    std::uint8_t flags_at(std::size_t idx) const {
        return arena_[idx * stride_ + code_size_ + payload_size_];
    }
    std::size_t payload_size() const { return payload_size_; }

    // Entry indices ordered by code bytes (deterministic emission order).
    std::vector<std::uint32_t> sorted_indices() const {
        std::vector<std::uint32_t> idx(count_);
        for (std::size_t i = 0; i < count_; ++i) idx[i] = static_cast<std::uint32_t>(i);
        std::sort(idx.begin(), idx.end(), [&](std::uint32_t a, std::uint32_t b) {
            return std::memcmp(code_at(a), code_at(b), code_size_) < 0;
        });
        return idx;
    }

  private:
    static std::uint64_t hash_bytes(const std::uint8_t* p, std::size_t n) {
        std::uint64_t h = 1469598103934665603ull;
        for (std::size_t i = 0; i < n; ++i) {
            h ^= p[i];
            h *= 1099511628211ull;
        }
        return h;
    }

    void grow() {
        std::vector<std::uint32_t> bigger(table_.size() * 2, 0);
        std::size_t mask = bigger.size() - 1;
        for (std::uint32_t slot : table_) {
            if (slot == 0) continue;
            std::uint64_t h = hash_bytes(arena_.data() + (slot - 1) * stride_, code_size_);
            std::size_t i = h & mask;
            while (bigger[i] != 0) i = (i + 1) & mask;
            bigger[i] = slot;
        }
        table_ = std::move(bigger);
    }

    std::size_t code_size_, payload_size_, stride_;
    std::vector<std::uint8_t> arena_;
    std::vector<std::uint32_t> table_;
    std::size_t count_ = 0;
};

struct LevelKey {
    int v, e;
    auto operator<=>(const LevelKey&) const = default;
};

std::size_t code_size_for(int edges) {
    return 1 + (4 * edges < 255 ? 12 * edges : 24 * edges);
}
std::size_t payload_size_for(int v, int e) { return 1 + 2 * static_cast<std::size_t>(e) + v; }

void run_parallel(int threads, std::size_t count, const std::function<void(std::size_t)>& fn) {
    if (threads <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                next.store(count);
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

class Generator {
  public:
    Generator(const GenerationConfig& cfg, const MapSink& sink) : cfg_(cfg), sink_(sink) {
        stats_.table.surface = cfg.surface;
        stats_.table.n_min = cfg.n_min;
        stats_.table.n_max = cfg.n_max;
        stats_.table.rows.assign(cfg.n_max - cfg.n_min + 1, CountRow{});
    }

    GenerateStats run() {
        if (cfg_.n_min < 1 || cfg_.n_min > cfg_.n_max)
            throw std::invalid_argument("generate: bad vertex range");
        if (cfg_.seeds.surface != cfg_.surface)
            throw std::invalid_argument("generate: seed surface mismatch");

        const bool tri_seeded = cfg_.filter == ClassFilter::triangulation ||
                                cfg_.filter == ClassFilter::polyhedral;
        SeedSet seeds = cfg_.seeds;
        if (!tri_seeded && seeds.irreducible_maps.empty())
            seeds = derive_irreducible_maps(seeds);

        for (const EmbeddedMap& m : seeds.irreducible_maps) {
            int v = m.vertex_count();
            if (v < cfg_.n_min || v > cfg_.n_max) continue;
            CountRow& r = stats_.table.row(v);
            std::uint8_t f = classify_flags(m);
            r.irr_open++;
            if (f & kFlagClosed2Cell) r.irr_closed++;
            if (f & kFlagTriangulation) r.irr_tri++;
        }
        if (cfg_.filter == ClassFilter::irreducible) {
            for (const EmbeddedMap& m : seeds.irreducible_maps) {
                int v = m.vertex_count();
                if (v >= cfg_.n_min && v <= cfg_.n_max) emit(m, v);
            }
            return std::move(stats_);
        }

        expand_to_face_irreducible(tri_seeded ? seeds.triangulations : seeds.irreducible_maps);
        if (cfg_.filter == ClassFilter::triangulation ||
            cfg_.filter == ClassFilter::face_irreducible)
            return std::move(stats_);

        for (int n = cfg_.n_min; n <= cfg_.n_max; ++n) expand_edge_removals(n);
        return std::move(stats_);
    }

  private:
    using LevelMap = std::map<LevelKey, LevelStore>;

    LevelStore& level(LevelMap& levels, LevelKey key) {
        auto it = levels.find(key);
        if (it == levels.end())
            it = levels.emplace(key, LevelStore(code_size_for(key.e),
                                                payload_size_for(key.v, key.e)))
                     .first;
        return it->second;
    }

    void check_cap(const LevelMap& levels) const {
        if (cfg_.level_cap_bytes == 0) return;
        std::uint64_t total = 0;
        for (const auto& [k, s] : levels) total += s.bytes();
        if (total > cfg_.level_cap_bytes)
            throw ResourceLimitError("level store exceeds cap of " +
                                     std::to_string(cfg_.level_cap_bytes) + " bytes");
    }

    bool insert_map(LevelMap& levels, std::mutex& mu, const EmbeddedMap& canonical,
                    const CanonicalCode& code, std::uint8_t flags) {
        auto payload = signed_code_bytes(canonical);
        LevelKey key{canonical.vertex_count(), canonical.edge_count()};
        std::lock_guard lock(mu);
        LevelStore& store = level(levels, key);
        assert(code.bytes.size() == code_size_for(key.e));
        assert(payload.size() == store.payload_size());
        bool fresh = store.insert_if_absent(code.bytes.data(), payload.data(), flags);
        if (fresh && (++inserts_ & 0xfff) == 0) check_cap(levels);
        return fresh;
    }

    // Step 3: repeated vertex splitting from the initial maps, keeping only
    // face-irreducible children (only faces at the split vertex can change).
    void expand_to_face_irreducible(const std::vector<EmbeddedMap>& initial) {
        LevelMap levels;
        std::mutex mu;
        for (const EmbeddedMap& m : initial) {
            if (m.vertex_count() > cfg_.n_max) continue;
            CanonicalResult cf = canonical_form(m);
            insert_map(levels, mu, cf.map, cf.code, classify_flags(cf.map));
        }

        for (int v = 1; v <= cfg_.n_max; ++v) {
            for (auto& [key, store] : levels) {
                if (key.v != v) continue;
                if (v < cfg_.n_max) {
                    run_parallel(cfg_.threads, store.size(), [&](std::size_t i) {
                        EmbeddedMap parent =
                            map_from_signed_code_bytes(store.payload_at(i), store.payload_size());
                        split_children(parent, levels, mu);
                    });
                    check_cap(levels);
                }
                if (key.v >= cfg_.n_min) collect_face_irreducible(key, store);
            }
        }
    }

    void split_children(const EmbeddedMap& parent, LevelMap& levels, std::mutex& mu) {
        const Vertex split_target = parent.vertex_count(); // new vertex id after split
        for (Vertex v = 0; v < parent.vertex_count(); ++v) {
            const int k = parent.degree(v);
            for (int p1 = 0; p1 < k; ++p1)
                for (int p2 = p1 + 1; p2 < k; ++p2) {
                    EmbeddedMap child = split_vertex(parent, v, p1, p2);
                    if (!face_irreducible_after_split(child, v, split_target)) continue;
                    CanonicalResult cf = canonical_form(child);
                    insert_map(levels, mu, cf.map, cf.code, classify_flags(cf.map));
                }
        }
    }

    static bool face_irreducible_after_split(const EmbeddedMap& m, Vertex v1, Vertex v2) {
        FaceData fd = trace_faces(m);
        for (const FaceWalk& w : fd.walks) {
            if (w.size() == 3) continue;
            bool touches = false;
            for (const FaceStep& s : w.steps) {
                Vertex t = m.vertex_of(s.dart);
                if (t == v1 || t == v2) {
                    touches = true;
                    break;
                }
            }
            if (touches && !is_irreducible_face(m, w)) return false;
        }
        return true;
    }

    void collect_face_irreducible(LevelKey key, const LevelStore& store) {
        CountRow& r = stats_.table.row(key.v);
        auto& bucket = face_irreducible_[key.v];
        auto order = cfg_.deterministic ? store.sorted_indices() : std::vector<std::uint32_t>{};
        for (std::size_t j = 0; j < store.size(); ++j) {
            std::size_t i = cfg_.deterministic ? order[j] : j;
            std::uint8_t f = store.flags_at(i);
            r.fi_open++;
            if (f & kFlagClosed2Cell) r.fi_closed++;
            if (f & kFlagTriangulation) r.fi_tri++;
            bool wanted = true;
            if (cfg_.filter == ClassFilter::triangulation) wanted = f & kFlagTriangulation;
            if (cfg_.filter == ClassFilter::closed_2cell) wanted = f & kFlagClosed2Cell;
            if (cfg_.filter == ClassFilter::polyhedral) wanted = f & kFlagPolyhedral;
            if (cfg_.filter == ClassFilter::triangulation ||
                cfg_.filter == ClassFilter::face_irreducible) {
                if (wanted)
                    emit(map_from_signed_code_bytes(store.payload_at(i), store.payload_size()),
                         key.v);
            } else if (wanted) {
                bucket[key.e].push_back(std::vector<std::uint8_t>(
                    store.payload_at(i), store.payload_at(i) + store.payload_size()));
            }
        }
    }

    // Step 4: repeated edge removal at fixed vertex count, one pass per edge
    // level from the triangulation bound downward. A level is complete once
    // all parents above it were expanded, so stores retire level by level.
    void expand_edge_removals(int n) {
        auto it = face_irreducible_.find(n);
        if (it == face_irreducible_.end()) return;
        auto& seeds_by_edges = it->second;
        if (seeds_by_edges.empty()) return;

        const bool prune_closed = cfg_.filter == ClassFilter::closed_2cell;
        const bool prune_poly = cfg_.filter == ClassFilter::polyhedral;
        const int e_max = seeds_by_edges.rbegin()->first;

        LevelMap levels;
        std::mutex mu;
        for (int e = e_max; e >= n - 1; --e) {
            LevelKey key{n, e};
            if (auto sit = seeds_by_edges.find(e); sit != seeds_by_edges.end()) {
                for (const auto& payload : sit->second) {
                    EmbeddedMap m = map_from_signed_code_bytes(payload.data(), payload.size());
                    CanonicalResult cf = canonical_form(m);
                    insert_map(levels, mu, cf.map, cf.code, classify_flags(cf.map));
                }
                seeds_by_edges.erase(sit);
            }
            auto lit = levels.find(key);
            if (lit == levels.end()) continue;
            LevelStore& store = lit->second;

            emit_level(store, n);
            run_parallel(cfg_.threads, store.size(), [&](std::size_t i) {
                EmbeddedMap parent =
                    map_from_signed_code_bytes(store.payload_at(i), store.payload_size());
                FaceData fd = trace_faces(parent);
                for (EdgeId edge = 0; edge < parent.edge_count(); ++edge) {
                    if (!can_remove_edge(parent, edge, fd)) continue;
                    EmbeddedMap child = remove_edge(parent, edge, fd);
                    std::uint8_t flags = classify_flags(child);
                    if (prune_closed && !(flags & kFlagClosed2Cell)) continue;
                    if (prune_poly && !(flags & kFlagPolyhedral)) continue;
                    CanonicalResult cf = canonical_form(child);
                    insert_map(levels, mu, cf.map, cf.code, flags);
                }
            });
            check_cap(levels);
            levels.erase(lit);
        }
    }

    void emit_level(const LevelStore& store, int n) {
        CountRow& r = stats_.table.row(n);
        auto order = cfg_.deterministic ? store.sorted_indices() : std::vector<std::uint32_t>{};
        for (std::size_t j = 0; j < store.size(); ++j) {
            std::size_t i = cfg_.deterministic ? order[j] : j;
            std::uint8_t f = store.flags_at(i);
            r.open++;
            if (f & kFlagClosed2Cell) r.closed++;
            if (f & kFlagPolyhedral) r.poly++;
            if (sink_)
                sink_(map_from_signed_code_bytes(store.payload_at(i), store.payload_size()), n);
            stats_.emitted++;
        }
    }

    void emit(const EmbeddedMap& m, int n) {
        if (sink_) sink_(m, n);
        stats_.emitted++;
    }

    GenerationConfig cfg_;
    const MapSink& sink_;
    GenerateStats stats_;
    std::uint64_t inserts_ = 0;
    // face-irreducible maps at each vertex count, bucketed by edge count
    std::map<int, std::map<int, std::vector<std::vector<std::uint8_t>>>> face_irreducible_;
};

} // namespace

GenerateStats generate(const GenerationConfig& cfg, const MapSink& sink) {
    Generator g(cfg, sink);
    return g.run();
}

CountTable count_table(const GenerationConfig& cfg) {
    GenerationConfig full = cfg;
    full.filter = ClassFilter::all;
    return generate(full, {}).table;
}

} // namespace surfgen
