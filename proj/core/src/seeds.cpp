#include "surfgen/seeds.hpp"

#include "surfgen/classes.hpp"
#include "surfgen/flags.hpp"
#include "surfgen/smt.hpp"
#include "surfgen/transforms.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <set>

namespace surfgen {

namespace {

struct GluingSearch {
    int n;
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::vector<std::vector<Vertex>> adj;      // adjacency lists
    std::vector<std::vector<EdgeId>> edge_id;  // n x n, -1 when absent
    SurfaceClass target;

    std::vector<int> slots;                       // filled face slots per edge
    std::vector<std::array<Vertex, 3>> instances; // chosen faces, sorted triples
    std::vector<EmbeddedMap> found;
    std::set<CanonicalCode> seen;

    void add_instance(const std::array<Vertex, 3>& t) {
        instances.push_back(t);
        slots[edge_id[t[0]][t[1]]]++;
        slots[edge_id[t[1]][t[2]]]++;
        slots[edge_id[t[0]][t[2]]]++;
    }
    void pop_instance() {
        const auto& t = instances.back();
        slots[edge_id[t[0]][t[1]]]--;
        slots[edge_id[t[1]][t[2]]]--;
        slots[edge_id[t[0]][t[2]]]--;
        instances.pop_back();
    }

    bool triangle_fits(const std::array<Vertex, 3>& t) const {
        return slots[edge_id[t[0]][t[1]]] < 2 && slots[edge_id[t[1]][t[2]]] < 2 &&
               slots[edge_id[t[0]][t[2]]] < 2;
    }

    std::vector<std::array<Vertex, 3>> candidates(EdgeId e) const {
        auto [u, v] = edges[e];
        std::vector<std::array<Vertex, 3>> out;
        for (Vertex w : adj[u]) {
            if (w == v || edge_id[w][v] < 0) continue;
            std::array<Vertex, 3> t{u, v, w};
            std::sort(t.begin(), t.end());
            if (triangle_fits(t)) out.push_back(t);
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    void search() {
        EdgeId open = -1;
        for (EdgeId e = 0; e < static_cast<EdgeId>(edges.size()); ++e)
            if (slots[e] < 2) {
                open = e;
                break;
            }
        if (open < 0) {
            accept();
            return;
        }
        auto cands = candidates(open);
        if (slots[open] == 1) {
            for (const auto& t : cands) {
                add_instance(t);
                search();
                pop_instance();
            }
        } else {
            // Fill both slots of the edge at once with an unordered pair of
            // triangles; j == i uses the same triangle twice.
            for (std::size_t i = 0; i < cands.size(); ++i) {
                add_instance(cands[i]);
                for (std::size_t j = i; j < cands.size(); ++j) {
                    if (!triangle_fits(cands[j])) continue;
                    add_instance(cands[j]);
                    search();
                    pop_instance();
                }
                pop_instance();
            }
        }
    }

    void accept() {
        const int T = static_cast<int>(instances.size());
        // Flags: 6 per face instance; corner i of instance t carries two
        // flags, one per incident face edge.
        const int nflags = 6 * T;
        std::vector<std::int32_t> s0(nflags), s1(nflags), s2(nflags, -1);
        auto flag = [](int t, int corner, int side) { return 6 * t + 2 * corner + side; };
        // Per-edge slot flags, matched by shared vertex.
        std::map<EdgeId, std::vector<std::array<std::int32_t, 2>>> edge_slots;
        for (int t = 0; t < T; ++t) {
            const auto& tri = instances[t];
            for (int i = 0; i < 3; ++i) {
                s1[flag(t, i, 0)] = flag(t, i, 1);
                s1[flag(t, i, 1)] = flag(t, i, 0);
                int ip = (i + 1) % 3;
                s0[flag(t, i, 0)] = flag(t, ip, 1);
                s0[flag(t, ip, 1)] = flag(t, i, 0);
                EdgeId e = edge_id[tri[i]][tri[ip]];
                // Keep slot flags ordered by vertex id so the two slots of
                // an edge pair up end-to-end.
                if (tri[i] < tri[ip])
                    edge_slots[e].push_back({flag(t, i, 0), flag(t, ip, 1)});
                else
                    edge_slots[e].push_back({flag(t, ip, 1), flag(t, i, 0)});
            }
        }
        for (auto& [e, fl] : edge_slots) {
            if (fl.size() != 2) return;
            // fl[k] = {flag at lower corner, flag at upper corner} of the
            // instance edge; corners are sorted, so same index = same vertex.
            s2[fl[0][0]] = fl[1][0];
            s2[fl[1][0]] = fl[0][0];
            s2[fl[0][1]] = fl[1][1];
            s2[fl[1][1]] = fl[0][1];
        }

        FlagSystem fs{std::move(s0), std::move(s1), std::move(s2)};
        if (fs.orbit_count(fs.s1, fs.s2) != n) return; // a vertex link is not one cycle
        if (!fs.is_connected()) return;
        if (fs.two_colorable() != target.orientable) return;

        EmbeddedMap m = map_from_involutions(fs.s0, fs.s1, fs.s2);
        CanonicalResult cf = canonical_form(m);
        if (seen.insert(cf.code).second) found.push_back(std::move(cf.map));
    }
};

} // namespace

std::vector<EmbeddedMap> triangular_embeddings(int n,
                                               const std::vector<std::pair<Vertex, Vertex>>& edges,
                                               const SurfaceClass& target) {
    const int E = static_cast<int>(edges.size());
    if (E == 0 || (2 * E) % 3 != 0) return {};
    // Face count is forced: chi decides feasibility up front.
    if (n - E + (2 * E) / 3 != target.chi) return {};

    GluingSearch gs;
    gs.n = n;
    gs.edges = edges;
    gs.target = target;
    gs.adj.assign(n, {});
    gs.edge_id.assign(n, std::vector<EdgeId>(n, -1));
    for (EdgeId e = 0; e < E; ++e) {
        auto [u, v] = edges[e];
        gs.adj[u].push_back(v);
        gs.adj[v].push_back(u);
        gs.edge_id[u][v] = gs.edge_id[v][u] = e;
    }
    gs.slots.assign(E, 0);
    gs.search();
    return std::move(gs.found);
}

namespace {

std::vector<std::pair<Vertex, Vertex>> complete_graph_edges(int n) {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) out.emplace_back(u, v);
    return out;
}

bool has_contractible_edge(const EmbeddedMap& m) {
    FaceData fd = trace_faces(m);
    for (EdgeId e = 0; e < m.edge_count(); ++e)
        if (is_contractible(m, e, fd)) return true;
    return false;
}

} // namespace

SeedSet sphere_seed() {
    auto embs = triangular_embeddings(4, complete_graph_edges(4), SurfaceClass::sphere());
    if (embs.size() != 1)
        throw SeedError(SeedError::Kind::bootstrap_failure,
                        "sphere seed: K4 search returned " + std::to_string(embs.size()) +
                            " embeddings");
    return SeedSet{SurfaceClass::sphere(), std::move(embs), {}};
}

SeedSet projective_seeds() {
    const SurfaceClass n1 = SurfaceClass::projective_plane();
    auto first = triangular_embeddings(6, complete_graph_edges(6), n1);

    // K7 minus a triangle: vertices 4, 5, 6 pairwise nonadjacent.
    std::vector<std::pair<Vertex, Vertex>> e2;
    for (auto [u, v] : complete_graph_edges(7))
        if (!(u >= 4 && v >= 4)) e2.emplace_back(u, v);
    auto second = triangular_embeddings(7, e2, n1);

    if (first.size() != 1 || second.size() != 1)
        throw SeedError(SeedError::Kind::bootstrap_failure,
                        "projective seeds: searches returned " + std::to_string(first.size()) +
                            " and " + std::to_string(second.size()) + " embeddings");
    for (const auto& m : {first[0], second[0]})
        if (!is_triangulation(m) || has_contractible_edge(m))
            throw SeedError(SeedError::Kind::bootstrap_failure,
                            "projective seeds: bootstrap produced a reducible triangulation");

    SeedSet out{n1, {}, {}};
    out.triangulations.push_back(std::move(first[0]));
    out.triangulations.push_back(std::move(second[0]));
    return out;
}

SeedSet load_seeds_stream(std::istream& in, const SurfaceClass& declared) {
    SeedSet out{declared, {}, {}};
    std::set<CanonicalCode> seen;
    for (SmtRecord& rec : read_smt(in)) {
        if (rec.declared_surface != declared)
            throw SeedError(SeedError::Kind::surface_mismatch,
                            "seed '" + rec.name + "' declares surface " +
                                rec.declared_surface.name() + ", expected " + declared.name());
        ValidationReport vr = validate_map(rec.map);
        if (!vr.ok())
            throw SeedError(SeedError::Kind::invariant_violation,
                            "seed '" + rec.name + "' failed validation: " + vr.failures.front());
        if (surface_class(rec.map) != declared)
            throw SeedError(SeedError::Kind::surface_mismatch,
                            "seed '" + rec.name + "' embeds in " +
                                surface_class(rec.map).name() + ", expected " + declared.name());
        if (!is_triangulation(rec.map))
            throw SeedError(SeedError::Kind::invariant_violation,
                            "seed '" + rec.name + "' is not a triangulation");
        if (has_contractible_edge(rec.map))
            throw SeedError(SeedError::Kind::invariant_violation,
                            "seed '" + rec.name + "' has a contractible edge");
        CanonicalResult cf = canonical_form(rec.map);
        if (seen.insert(cf.code).second) out.triangulations.push_back(std::move(cf.map));
    }
    return out;
}

SeedSet load_seeds(const std::string& path, const SurfaceClass& declared) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return load_seeds_stream(in, declared);
}

SeedSet derive_irreducible_maps(const SeedSet& seeds) {
    SeedSet out = seeds;
    std::map<CanonicalCode, EmbeddedMap> derived;
    for (const EmbeddedMap& seed : seeds.triangulations) {
        const int V = seed.vertex_count();
        if (V > 24)
            throw std::runtime_error("derive_irreducible_maps: seed too large for subset scan");
        const std::uint32_t limit = 1u << V;
        std::vector<bool> remove(V);
        for (std::uint32_t mask = 0; mask + 1 < limit; ++mask) {
            for (int v = 0; v < V; ++v) remove[v] = (mask >> v) & 1;
            DeleteResult dr = delete_vertices(seed, remove);
            if (!dr.accepted()) continue;
            if (!is_irreducible_map(*dr.map)) continue;
            CanonicalResult cf = canonical_form(*dr.map);
            derived.emplace(std::move(cf.code), std::move(cf.map));
        }
        // Seed triangulations always flow into the result, K4-in-the-sphere
        // included even though the predicate excludes it.
        CanonicalResult cf = canonical_form(seed);
        derived.emplace(std::move(cf.code), std::move(cf.map));
    }
    out.irreducible_maps.clear();
    for (auto& [code, m] : derived) out.irreducible_maps.push_back(std::move(m));
    std::stable_sort(out.irreducible_maps.begin(), out.irreducible_maps.end(),
                     [](const EmbeddedMap& a, const EmbeddedMap& b) {
                         if (a.vertex_count() != b.vertex_count())
                             return a.vertex_count() < b.vertex_count();
                         return a.edge_count() < b.edge_count();
                     });
    return out;
}

int expected_seed_count(const SurfaceClass& s) {
    if (s == SurfaceClass::torus()) return 21;
    if (s == SurfaceClass::klein_bottle()) return 29;
    if (s == SurfaceClass::projective_plane()) return 2;
    if (s == SurfaceClass::sphere()) return 1;
    if (s == SurfaceClass::make(-2, true)) return 396784;   // double torus
    if (s == SurfaceClass::make(-1, false)) return 9708;    // N3
    if (s == SurfaceClass::make(-2, false)) return 6297982; // N4
    return 0;
}

} // namespace surfgen
