#include "surfgen/flags.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace surfgen {

FlagSystem flags_of(const EmbeddedMap& m) {
    const std::int32_t n = 2 * m.dart_count();
    FlagSystem fs;
    fs.s0.resize(n);
    fs.s1.resize(n);
    fs.s2.resize(n);
    for (Dart d = 0; d < m.dart_count(); ++d) {
        bool pos = m.sign(m.edge_of(d)) > 0;
        fs.s0[2 * d] = 2 * (d ^ 1) + (pos ? 1 : 0);
        fs.s0[2 * d + 1] = 2 * (d ^ 1) + (pos ? 0 : 1);
        fs.s1[2 * d] = 2 * m.pred(d) + 1;
        fs.s1[2 * d + 1] = 2 * m.succ(d);
        fs.s2[2 * d] = 2 * d + 1;
        fs.s2[2 * d + 1] = 2 * d;
    }
    return fs;
}

bool FlagSystem::is_connected() const {
    const int n = flag_count();
    if (n == 0) return true;
    std::vector<bool> seen(n, false);
    std::vector<std::int32_t> stack{0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
        std::int32_t f = stack.back();
        stack.pop_back();
        for (std::int32_t g : {s0[f], s1[f], s2[f]}) {
            if (!seen[g]) {
                seen[g] = true;
                ++reached;
                stack.push_back(g);
            }
        }
    }
    return reached == n;
}

int FlagSystem::orbit_count(const std::vector<std::int32_t>& a,
                            const std::vector<std::int32_t>& b) const {
    const int n = flag_count();
    std::vector<bool> seen(n, false);
    int orbits = 0;
    std::vector<std::int32_t> stack;
    for (std::int32_t f0 = 0; f0 < n; ++f0) {
        if (seen[f0]) continue;
        ++orbits;
        seen[f0] = true;
        stack.push_back(f0);
        while (!stack.empty()) {
            std::int32_t f = stack.back();
            stack.pop_back();
            for (std::int32_t g : {a[f], b[f]}) {
                if (!seen[g]) {
                    seen[g] = true;
                    stack.push_back(g);
                }
            }
        }
    }
    return orbits;
}

bool FlagSystem::two_colorable() const {
    const int n = flag_count();
    std::vector<std::int8_t> color(n, -1);
    std::vector<std::int32_t> stack;
    for (std::int32_t start = 0; start < n; ++start) {
        if (color[start] >= 0) continue;
        color[start] = 0;
        stack.push_back(start);
        while (!stack.empty()) {
            std::int32_t f = stack.back();
            stack.pop_back();
            for (std::int32_t g : {s0[f], s1[f], s2[f]}) {
                if (color[g] < 0) {
                    color[g] = static_cast<std::int8_t>(1 - color[f]);
                    stack.push_back(g);
                } else if (color[g] == color[f]) {
                    return false;
                }
            }
        }
    }
    return true;
}

std::uint64_t CanonicalCode::hash() const {
    std::uint64_t h = 1469598103934665603ull; // FNV-1a
    for (std::uint8_t b : bytes) {
        h ^= b;
        h *= 1099511628211ull;
    }
    return h;
}

namespace {

// BFS numbering from one start flag; appends the numbered-neighbor sequence
// into `code` and compares it on the fly against `best`.
// Returns <0 if code < best, 0 if equal, >0 if worse (aborts early).
int run_bfs_code(const FlagSystem& fs, std::int32_t start, std::vector<std::int32_t>& num,
                 std::vector<std::int32_t>& order, std::vector<std::int32_t>& code,
                 const std::vector<std::int32_t>& best) {
    const int n = fs.flag_count();
    num.assign(n, -1);
    order.clear();
    code.clear();
    num[start] = 0;
    order.push_back(start);
    bool better = best.empty();
    for (std::size_t qi = 0; qi < order.size(); ++qi) {
        std::int32_t f = order[qi];
        for (const auto* inv : {&fs.s0, &fs.s1, &fs.s2}) {
            std::int32_t g = (*inv)[f];
            if (num[g] < 0) {
                num[g] = static_cast<std::int32_t>(order.size());
                order.push_back(g);
            }
            code.push_back(num[g]);
            if (!better) {
                std::int32_t ref = best[code.size() - 1];
                if (code.back() > ref) return 1;
                if (code.back() < ref) better = true;
            }
        }
    }
    return better ? -1 : 0;
}

std::vector<std::uint8_t> encode_code(const std::vector<std::int32_t>& code, int nflags) {
    std::vector<std::uint8_t> bytes;
    if (nflags < 255) {
        bytes.reserve(code.size() + 1);
        bytes.push_back(1);
        for (std::int32_t x : code) bytes.push_back(static_cast<std::uint8_t>(x));
    } else {
        bytes.reserve(2 * code.size() + 1);
        bytes.push_back(2);
        for (std::int32_t x : code) {
            bytes.push_back(static_cast<std::uint8_t>(x >> 8));
            bytes.push_back(static_cast<std::uint8_t>(x & 0xff));
        }
    }
    return bytes;
}

struct MinimalNumbering {
    std::vector<std::int32_t> code;  // raw entries, 3 per flag
    std::vector<std::int32_t> order; // BFS order: number -> flag
};

MinimalNumbering minimal_numbering(const FlagSystem& fs) {
    const int n = fs.flag_count();
    if (n == 0) throw std::invalid_argument("canonical code: empty flag system");
    MinimalNumbering best;
    std::vector<std::int32_t> num, order, code;
    for (std::int32_t start = 0; start < n; ++start) {
        int cmp = run_bfs_code(fs, start, num, order, code, best.code);
        if (cmp < 0) {
            best.code = code;
            best.order = order;
        }
    }
    return best;
}

} // namespace

CanonicalCode canonical_code(const EmbeddedMap& m) {
    FlagSystem fs = flags_of(m);
    MinimalNumbering best = minimal_numbering(fs);
    return CanonicalCode{encode_code(best.code, fs.flag_count())};
}

EmbeddedMap map_from_involutions(const std::vector<std::int32_t>& s0,
                                 const std::vector<std::int32_t>& s1,
                                 const std::vector<std::int32_t>& s2) {
    const int n = static_cast<int>(s0.size());
    if (n == 0 || n % 4 != 0) throw std::invalid_argument("flag system: size must be 4E");

    // Vertices: orbits of <s1,s2>, numbered by smallest flag.
    std::vector<std::int32_t> vert(n, -1);
    int vcount = 0;
    {
        std::vector<std::int32_t> stack;
        for (std::int32_t f0 = 0; f0 < n; ++f0) {
            if (vert[f0] >= 0) continue;
            int id = vcount++;
            vert[f0] = id;
            stack.push_back(f0);
            while (!stack.empty()) {
                std::int32_t f = stack.back();
                stack.pop_back();
                for (std::int32_t g : {s1[f], s2[f]})
                    if (vert[g] < 0) {
                        vert[g] = id;
                        stack.push_back(g);
                    }
            }
        }
    }

    // Local side classes: rotation at a vertex is the dart cycle of s2*s1
    // starting from the vertex's smallest flag. Flags reached that way form
    // the chosen side; sign of an edge is +1 when s0 crosses to the other
    // side at the far end.
    std::vector<std::int8_t> chosen(n, 0);
    std::vector<std::int32_t> first_flag(vcount, -1);
    for (std::int32_t f = 0; f < n; ++f)
        if (first_flag[vert[f]] < 0) first_flag[vert[f]] = f;

    std::vector<std::vector<std::int32_t>> rot_flags(vcount); // chosen-side flag per dart slot
    for (int v = 0; v < vcount; ++v) {
        std::int32_t f = first_flag[v];
        do {
            chosen[f] = 1;
            rot_flags[v].push_back(f);
            f = s2[s1[f]];
        } while (f != first_flag[v]);
    }

    // A dart is an s2-pair; identify it by its chosen-side flag.
    // Edge = <s0,s2> orbit = 4 flags = 2 darts.
    std::vector<std::vector<Vertex>> rots(vcount);
    for (int v = 0; v < vcount; ++v) {
        rots[v].reserve(rot_flags[v].size());
        for (std::int32_t f : rot_flags[v]) {
            std::int32_t far = s0[f];
            // far flag sits on the other end of the edge; its s2-pair is the
            // mate dart, whose vertex is the neighbor.
            rots[v].push_back(vert[far]);
        }
    }
    std::vector<std::pair<Vertex, Vertex>> twisted;
    {
        std::vector<bool> edge_done(n, false);
        for (int v = 0; v < vcount; ++v) {
            for (std::int32_t f : rot_flags[v]) {
                if (edge_done[f]) continue;
                std::int32_t far = s0[f];
                edge_done[f] = edge_done[s2[f]] = true;
                edge_done[far] = edge_done[s2[far]] = true;
                bool crosses = chosen[far] == 0;
                if (!crosses) twisted.emplace_back(v, vert[far]);
            }
        }
    }
    return EmbeddedMap::from_rotations(rots, twisted);
}

CanonicalResult canonical_form(const EmbeddedMap& m) {
    FlagSystem fs = flags_of(m);
    MinimalNumbering best = minimal_numbering(fs);
    const int n = fs.flag_count();

    // Relabel the involutions by the winning numbering, then rebuild.
    std::vector<std::int32_t> num(n, -1);
    for (std::int32_t i = 0; i < n; ++i) num[best.order[i]] = i;
    std::vector<std::int32_t> c0(n), c1(n), c2(n);
    for (std::int32_t i = 0; i < n; ++i) {
        std::int32_t f = best.order[i];
        c0[i] = num[fs.s0[f]];
        c1[i] = num[fs.s1[f]];
        c2[i] = num[fs.s2[f]];
    }
    return CanonicalResult{CanonicalCode{encode_code(best.code, n)},
                           map_from_involutions(c0, c1, c2)};
}

bool is_isomorphic(const EmbeddedMap& a, const EmbeddedMap& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    return canonical_code(a) == canonical_code(b);
}

} // namespace surfgen
