#include "surfgen/transforms.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace surfgen {

namespace {

Vertex walk_vertex(const EmbeddedMap& m, const FaceWalk& w, int i) {
    const int n = w.size();
    return m.vertex_of(w.steps[((i % n) + n) % n].dart);
}

// Insert `nbr` into `rot` next to the entry at `pos`: before it when the walk
// passes the corner with orientation +1, after it when -1.
void insert_at_step(std::vector<Vertex>& rot, int pos, int orient, Vertex nbr) {
    rot.insert(rot.begin() + pos + (orient < 0 ? 1 : 0), nbr);
}

} // namespace

bool is_contractible(const EmbeddedMap& m, EdgeId e, const FaceData& fd) {
    const Dart d = 2 * e;
    const Vertex u = m.vertex_of(d);
    const Vertex v = m.head_of(d);

    int common = 0;
    for (int i = 0; i < m.degree(u); ++i) {
        Vertex w = m.head_of(m.rotation_dart(u, i));
        if (w != v && m.adjacent(w, v)) ++common;
    }
    if (common != 2) return false;

    const FaceWalk& fa = fd.walks[fd.face_left_of(d)];
    const FaceWalk& fb = fd.walks[fd.face_right_of(d)];
    if (fa.size() != 3 || fb.size() != 3) return false;
    auto apex = [&](const FaceWalk& f) -> Vertex {
        for (const FaceStep& s : f.steps) {
            Vertex t = m.vertex_of(s.dart);
            if (t != u && t != v) return t;
        }
        return -1;
    };
    Vertex w1 = apex(fa), w2 = apex(fb);
    return w1 >= 0 && w2 >= 0 && w1 != w2;
}

bool is_contractible(const EmbeddedMap& m, EdgeId e) {
    return is_contractible(m, e, trace_faces(m));
}

namespace {

bool is_k4_on_sphere(const EmbeddedMap& m) {
    if (m.vertex_count() != 4 || m.edge_count() != 6) return false;
    return surface_class(m) == SurfaceClass::sphere();
}

} // namespace

EmbeddedMap contract_edge(const EmbeddedMap& m, EdgeId e) {
    if (is_k4_on_sphere(m))
        throw MapError(MapErrorCode::k4_sphere_exception,
                       "contract_edge: K4 in the sphere admits no contraction");
    if (!is_contractible(m, e))
        throw MapError(MapErrorCode::not_contractible, "contract_edge: edge is not contractible");

    EmbeddedMap work = m;
    Vertex v1 = m.vertex_of(2 * e);
    Vertex v2 = m.head_of(2 * e);
    if (m.sign(e) < 0) {
        work = vertex_flip(m, v2);
        // edge ids are stable under a flip rebuild only by pair lookup
    }
    EdgeId we = work.edge_between(v1, v2);
    assert(we >= 0 && work.sign(we) > 0);

    auto rots = work.rotations();
    auto twisted = work.twisted_edges();

    // v1's rotation around the v2 entry: [..., u_before, v2, u_after, ...]
    const auto& r1 = rots[v1];
    const auto& r2 = rots[v2];
    const int k1 = static_cast<int>(r1.size());
    const int k2 = static_cast<int>(r2.size());
    int p1 = -1;
    for (int i = 0; i < k1; ++i)
        if (r1[i] == v2) p1 = i;
    int p2 = -1;
    for (int i = 0; i < k2; ++i)
        if (r2[i] == v1) p2 = i;
    assert(p1 >= 0 && p2 >= 0);
    Vertex u_before = r1[(p1 + k1 - 1) % k1];
    Vertex u_after = r1[(p1 + 1) % k1];

    // Both faces at the edge are triangles, so v2's rotation read from the v1
    // entry runs [v1, u_before, ..., u_after].
    assert(r2[(p2 + 1) % k2] == u_before);
    assert(r2[(p2 + k2 - 1) % k2] == u_after);

    // Merge: replace v1's v2-entry with v2's arc strictly between the hinges.
    std::vector<Vertex> merged;
    merged.reserve(k1 + k2 - 6);
    for (int i = 1; i < k1; ++i) merged.push_back(r1[(p1 + i) % k1]);
    std::vector<Vertex> arc;
    for (int i = 2; i + 1 < k2; ++i) arc.push_back(r2[(p2 + i) % k2]);
    merged.insert(merged.end(), arc.begin(), arc.end());

    rots[v1] = std::move(merged);
    // Drop the doubled hinge edges at u_before / u_after and rehome the arc.
    auto drop_entry = [&](Vertex at, Vertex target) {
        auto& r = rots[at];
        r.erase(std::find(r.begin(), r.end(), target));
    };
    drop_entry(u_before, v2);
    drop_entry(u_after, v2);
    for (Vertex x : arc)
        for (Vertex& y : rots[x])
            if (y == v2) y = v1;

    rots.erase(rots.begin() + v2);
    auto renum = [&](Vertex x) { return x > v2 ? x - 1 : x; };
    for (auto& r : rots)
        for (Vertex& y : r) y = renum(y);

    std::vector<std::pair<Vertex, Vertex>> new_twisted;
    for (auto [a, b] : twisted) {
        if ((a == v1 && b == v2) || (a == v2 && b == v1)) continue;
        if ((a == v2 && (b == u_before || b == u_after)) ||
            (b == v2 && (a == u_before || a == u_after)))
            continue; // dropped hinge copies; signs match the kept copies
        if (a == v2) a = v1;
        if (b == v2) b = v1;
        new_twisted.emplace_back(renum(a), renum(b));
    }
    return EmbeddedMap::from_rotations(rots, new_twisted);
}

EmbeddedMap split_vertex(const EmbeddedMap& m, Vertex v, int p1, int p2) {
    const int k = m.degree(v);
    if (p1 == p2 || p1 < 0 || p2 < 0 || p1 >= k || p2 >= k)
        throw MapError(MapErrorCode::invalid_corner, "split_vertex: bad hinge positions");

    EmbeddedMap work = m;
    Vertex u1 = m.head_of(m.rotation_dart(v, p1));
    Vertex u2 = m.head_of(m.rotation_dart(v, p2));
    if (u1 == u2)
        throw MapError(MapErrorCode::simplicity_violation,
                       "split_vertex: hinges share a neighbor");
    if (work.sign(work.edge_of(work.rotation_dart(v, p1))) < 0) work = vertex_flip(work, u1);
    if (work.sign(work.edge_of(work.rotation_dart(v, p2))) < 0) work = vertex_flip(work, u2);

    auto rots = work.rotations();
    auto twisted = work.twisted_edges();
    const std::vector<Vertex> old_rot = rots[v];
    const Vertex v2 = work.vertex_count();

    std::vector<Vertex> arc_a, arc_b;
    for (int i = (p1 + 1) % k; i != p2; i = (i + 1) % k) arc_a.push_back(old_rot[i]);
    for (int i = (p2 + 1) % k; i != p1; i = (i + 1) % k) arc_b.push_back(old_rot[i]);

    // v keeps both old hinge edges plus arc A; the new half gets new hinge
    // edges, the new joint edge and arc B.
    std::vector<Vertex> r_v1;
    r_v1.push_back(u1);
    r_v1.insert(r_v1.end(), arc_a.begin(), arc_a.end());
    r_v1.push_back(u2);
    r_v1.push_back(v2);
    std::vector<Vertex> r_v2;
    r_v2.push_back(v);
    r_v2.push_back(u2);
    r_v2.insert(r_v2.end(), arc_b.begin(), arc_b.end());
    r_v2.push_back(u1);

    rots[v] = std::move(r_v1);
    rots.push_back(std::move(r_v2));
    for (Vertex x : arc_b) {
        auto& r = rots[x];
        *std::find(r.begin(), r.end(), v) = v2;
    }

    // u1: the new dart to v2 follows the old dart to v; u2: it precedes it.
    {
        auto& r = rots[u1];
        int q = static_cast<int>(std::find(r.begin(), r.end(), v) - r.begin());
        r.insert(r.begin() + q + 1, v2);
    }
    {
        auto& r = rots[u2];
        int q = static_cast<int>(std::find(r.begin(), r.end(), v) - r.begin());
        r.insert(r.begin() + q, v2);
    }

    std::vector<std::pair<Vertex, Vertex>> new_twisted;
    std::vector<bool> in_b(work.vertex_count(), false);
    for (Vertex x : arc_b) in_b[x] = true;
    for (auto [a, b] : twisted) {
        if (a == v && in_b[b]) a = v2;
        else if (b == v && in_b[a]) b = v2;
        new_twisted.emplace_back(a, b);
    }
    return EmbeddedMap::from_rotations(rots, new_twisted);
}

EmbeddedMap split_vertex(const EmbeddedMap& m, Vertex v, const CornerRef& c1,
                         const CornerRef& c2, const FaceData& fd) {
    auto hinge_pos = [&](const CornerRef& c) {
        const FaceWalk& w = fd.walks.at(c.face);
        if (c.position < 0 || c.position >= w.size())
            throw MapError(MapErrorCode::invalid_corner, "split_vertex: corner position");
        Dart out = w.steps[(c.position + 1) % w.size()].dart;
        if (m.vertex_of(out) != v)
            throw MapError(MapErrorCode::invalid_corner, "split_vertex: corner not at vertex");
        return m.position_of(out);
    };
    int p1 = hinge_pos(c1), p2 = hinge_pos(c2);
    if (p1 == p2)
        throw MapError(MapErrorCode::simplicity_violation,
                       "split_vertex: corners resolve to one hinge");
    return split_vertex(m, v, p1, p2);
}

bool can_remove_edge(const EmbeddedMap& m, EdgeId e, const FaceData& fd) {
    const Dart d = 2 * e;
    int fl = fd.face_left_of(d), fr = fd.face_right_of(d);
    if (fl == fr) return false;
    return fd.walks[fl].size() == 3 || fd.walks[fr].size() == 3;
}

EmbeddedMap remove_edge(const EmbeddedMap& m, EdgeId e, const FaceData& fd) {
    const Dart d = 2 * e;
    int fl = fd.face_left_of(d), fr = fd.face_right_of(d);
    if (fl == fr)
        throw MapError(MapErrorCode::same_face_both_sides,
                       "remove_edge: both sides are one face");
    if (fd.walks[fl].size() != 3 && fd.walks[fr].size() != 3)
        throw MapError(MapErrorCode::no_3face_on_edge, "remove_edge: no incident 3-face");

    auto rots = m.rotations();
    const Vertex u = m.vertex_of(d), v = m.head_of(d);
    rots[u].erase(rots[u].begin() + m.position_of(d));
    rots[v].erase(rots[v].begin() + m.position_of(m.mate(d)));
    std::vector<std::pair<Vertex, Vertex>> twisted;
    for (auto [a, b] : m.twisted_edges())
        if (!((a == u && b == v) || (a == v && b == u))) twisted.emplace_back(a, b);
    return EmbeddedMap::from_rotations(rots, twisted);
}

EmbeddedMap remove_edge(const EmbeddedMap& m, EdgeId e) {
    return remove_edge(m, e, trace_faces(m));
}

EmbeddedMap add_corner_edge(const EmbeddedMap& m, const CornerRef& c, const FaceData& fd) {
    const FaceWalk& w = fd.walks.at(c.face);
    const int n = w.size();
    if (n < 4)
        throw MapError(MapErrorCode::face_not_large, "add_corner_edge: face has size < 4");
    const int i = ((c.position % n) + n) % n;

    int a, b;
    if (walk_vertex(m, w, i) == walk_vertex(m, w, i + 2)) {
        a = (i + 1) % n;
        b = (i + 3) % n;
    } else {
        a = i;
        b = (i + 2) % n;
    }
    const Vertex va = walk_vertex(m, w, a);
    const Vertex vb = walk_vertex(m, w, b);
    if (va == vb || m.adjacent(va, vb))
        throw MapError(MapErrorCode::corner_blocked, "add_corner_edge: edge already present");

    const FaceStep& sa = w.steps[a];
    const FaceStep& sb = w.steps[b];
    auto rots = m.rotations();
    insert_at_step(rots[va], m.position_of(sa.dart), sa.orient, vb);
    insert_at_step(rots[vb], m.position_of(sb.dart), sb.orient, va);
    auto twisted = m.twisted_edges();
    if (sa.orient * sb.orient < 0) twisted.emplace_back(va, vb);
    return EmbeddedMap::from_rotations(rots, twisted);
}

EmbeddedMap add_corner_edge(const EmbeddedMap& m, const CornerRef& c) {
    return add_corner_edge(m, c, trace_faces(m));
}

bool is_irreducible_face(const EmbeddedMap& m, const FaceWalk& f) {
    const int n = f.size();
    if (n < 4) return false;
    for (int i = 0; i < n; ++i) {
        Vertex a = walk_vertex(m, f, i);
        Vertex b = walk_vertex(m, f, i + 2);
        if (a == b || !m.adjacent(a, b)) return false;
    }
    return true;
}

bool is_face_irreducible(const EmbeddedMap& m, const FaceData& fd) {
    for (const FaceWalk& f : fd.walks)
        if (f.size() != 3 && !is_irreducible_face(m, f)) return false;
    return true;
}

bool is_face_irreducible(const EmbeddedMap& m) { return is_face_irreducible(m, trace_faces(m)); }

bool is_irreducible_map(const EmbeddedMap& m) {
    if (is_k4_on_sphere(m)) return false;
    FaceData fd = trace_faces(m);
    if (!is_face_irreducible(m, fd)) return false;
    for (EdgeId e = 0; e < m.edge_count(); ++e)
        if (is_contractible(m, e, fd)) return false;
    return true;
}

namespace {

struct CutPieces {
    bool one_sided = false;
    std::vector<std::vector<Vertex>> rots;
    std::vector<std::pair<Vertex, Vertex>> twisted;
    std::array<Vertex, 3> u; // X-side copies (old ids)
    std::array<Vertex, 3> v; // Y-side copies (appended)
};

// Cuts m open along the 3-cycle. Cycle signs are first normalized so that
// w1w2 and w2w3 are positive; the sign of w3w1 then decides sidedness.
CutPieces cut_3cycle(const EmbeddedMap& m, const Cycle3& cyc) {
    for (int i = 0; i < 3; ++i)
        if (!m.adjacent(cyc[i], cyc[(i + 1) % 3]))
            throw MapError(MapErrorCode::not_a_3cycle, "cut: vertices do not form a 3-cycle");

    EmbeddedMap work = m;
    if (work.sign(work.edge_between(cyc[0], cyc[1])) < 0) work = vertex_flip(work, cyc[1]);
    if (work.sign(work.edge_between(cyc[1], cyc[2])) < 0) work = vertex_flip(work, cyc[2]);
    const bool one_sided = work.sign(work.edge_between(cyc[2], cyc[0])) < 0;

    CutPieces out;
    out.one_sided = one_sided;
    const int V = work.vertex_count();
    auto rots = work.rotations();
    for (int i = 0; i < 3; ++i) {
        out.u[i] = cyc[i];
        out.v[i] = V + i;
    }

    // Arc X_i runs from the dart to w_{i+1} to the dart to w_{i-1} in
    // successor order; Y_i is the complementary arc.
    std::array<std::vector<Vertex>, 3> arc_x, arc_y;
    for (int i = 0; i < 3; ++i) {
        const auto& r = rots[cyc[i]];
        const int k = static_cast<int>(r.size());
        int p_next = -1, p_prev = -1;
        for (int j = 0; j < k; ++j) {
            if (r[j] == cyc[(i + 1) % 3]) p_next = j;
            if (r[j] == cyc[(i + 2) % 3]) p_prev = j;
        }
        assert(p_next >= 0 && p_prev >= 0);
        for (int j = (p_next + 1) % k; j != p_prev; j = (j + 1) % k) arc_x[i].push_back(r[j]);
        for (int j = (p_prev + 1) % k; j != p_next; j = (j + 1) % k) arc_y[i].push_back(r[j]);
    }

    // Which side each non-cycle neighbor entry is on, for renaming.
    std::vector<std::array<std::int8_t, 3>> side_of(V, {0, 0, 0});
    for (int i = 0; i < 3; ++i)
        for (Vertex z : arc_y[i]) side_of[z][i] = 1;

    out.rots = rots;
    out.rots.resize(V + 3);
    for (int i = 0; i < 3; ++i) {
        const int n1 = (i + 1) % 3, n2 = (i + 2) % 3;
        std::vector<Vertex> ru, rv;
        ru.push_back(out.u[n1]);
        ru.insert(ru.end(), arc_x[i].begin(), arc_x[i].end());
        ru.push_back(one_sided && i == 0 ? out.v[2] : out.u[n2]);
        if (one_sided && i == 2) ru[0] = out.v[0];
        rv.push_back(out.v[n1]);
        rv.push_back(one_sided && i == 0 ? out.u[2] : out.v[n2]);
        if (one_sided && i == 2) rv[0] = out.u[0];
        rv.insert(rv.end(), arc_y[i].begin(), arc_y[i].end());
        out.rots[out.u[i]] = std::move(ru);
        out.rots[out.v[i]] = std::move(rv);
    }
    // Rename arc-Y edge ends on the non-cycle side.
    for (int i = 0; i < 3; ++i)
        for (Vertex z : arc_y[i])
            for (Vertex& y : out.rots[z])
                if (y == cyc[i] && side_of[z][i]) {
                    // first matching entry belongs to this arc; a vertex can
                    // neighbor w_i only once in a simple graph
                    y = out.v[i];
                    break;
                }

    for (auto [a, b] : work.twisted_edges()) {
        bool a_cyc = (a == cyc[0] || a == cyc[1] || a == cyc[2]);
        bool b_cyc = (b == cyc[0] || b == cyc[1] || b == cyc[2]);
        if (a_cyc && b_cyc) continue; // cycle copies get explicit signs below
        if (b_cyc) std::swap(a, b), std::swap(a_cyc, b_cyc);
        if (a_cyc) {
            int i = (a == cyc[0]) ? 0 : (a == cyc[1]) ? 1 : 2;
            out.twisted.emplace_back(side_of[b][i] ? out.v[i] : out.u[i], b);
        } else {
            out.twisted.emplace_back(a, b);
        }
    }
    if (one_sided) {
        out.twisted.emplace_back(out.u[2], out.v[0]);
        out.twisted.emplace_back(out.v[2], out.u[0]);
    }
    return out;
}

int component_count(const std::vector<std::vector<Vertex>>& rots, std::vector<int>& comp) {
    const int n = static_cast<int>(rots.size());
    comp.assign(n, -1);
    int count = 0;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = count;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            for (Vertex y : rots[x])
                if (comp[y] < 0) {
                    comp[y] = count;
                    stack.push_back(y);
                }
        }
        ++count;
    }
    return count;
}

EmbeddedMap component_map(const CutPieces& cut, const std::vector<int>& comp, int which) {
    std::vector<Vertex> new_id(cut.rots.size(), -1);
    Vertex next = 0;
    for (std::size_t v = 0; v < cut.rots.size(); ++v)
        if (comp[v] == which) new_id[v] = next++;
    std::vector<std::vector<Vertex>> rots(next);
    for (std::size_t v = 0; v < cut.rots.size(); ++v) {
        if (comp[v] != which) continue;
        auto& r = rots[new_id[v]];
        r.reserve(cut.rots[v].size());
        for (Vertex y : cut.rots[v]) r.push_back(new_id[y]);
    }
    std::vector<std::pair<Vertex, Vertex>> twisted;
    for (auto [a, b] : cut.twisted)
        if (comp[a] == which) twisted.emplace_back(new_id[a], new_id[b]);
    return EmbeddedMap::from_rotations(rots, twisted);
}

} // namespace

CycleClass classify_3cycle(const EmbeddedMap& m, const Cycle3& c) {
    CycleClass out;
    CutPieces cut = cut_3cycle(m, c);
    out.one_sided = cut.one_sided;
    std::vector<int> comp;
    int ncomp = component_count(cut.rots, comp);
    assert(!cut.one_sided || ncomp == 1);
    out.separating = (ncomp == 2);
    if (!out.separating) {
        out.essential = true;
    } else {
        // Essential unless one side caps off to a sphere.
        bool disk_side = false;
        for (int i = 0; i < ncomp; ++i) {
            EmbeddedMap piece = component_map(cut, comp, i);
            if (surface_class(piece) == SurfaceClass::sphere()) disk_side = true;
        }
        out.essential = !disk_side;
    }
    return out;
}

EmbeddedMap fill_face_with_apex(const EmbeddedMap& m, const FaceWalk& walk) {
    const int n = walk.size();
    auto rots = m.rotations();
    const Vertex apex = m.vertex_count();

    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) {
        pos[i] = m.position_of(walk.steps[i].dart);
        for (int j = 0; j < i; ++j)
            if (walk_vertex(m, walk, i) == walk_vertex(m, walk, j))
                throw MapError(MapErrorCode::invalid_corner,
                               "fill_face_with_apex: walk repeats a vertex");
    }
    for (int i = 0; i < n; ++i)
        insert_at_step(rots[walk_vertex(m, walk, i)], pos[i], walk.steps[i].orient, apex);

    std::vector<Vertex> apex_rot;
    for (int i = n - 1; i >= 0; --i) apex_rot.push_back(walk_vertex(m, walk, i));
    rots.push_back(std::move(apex_rot));

    auto twisted = m.twisted_edges();
    for (int i = 0; i < n; ++i)
        if (walk.steps[i].orient < 0) twisted.emplace_back(apex, walk_vertex(m, walk, i));
    return EmbeddedMap::from_rotations(rots, twisted);
}

EmbeddedMap cut_and_cap(const EmbeddedMap& m, const Cycle3& c) {
    CutPieces cut = cut_3cycle(m, c);
    std::vector<int> comp;
    if (component_count(cut.rots, comp) != 1)
        throw MapError(MapErrorCode::separating_cycle, "cut_and_cap: cycle separates");

    EmbeddedMap open = EmbeddedMap::from_rotations(cut.rots, cut.twisted);
    if (!cut.one_sided) return open;

    // One-sided cut leaves a hexagonal hole u1 u2 u3 v1 v2 v3; cap it.
    FaceData fd = trace_faces(open);
    const std::array<Vertex, 6> hex = {cut.u[0], cut.u[1], cut.u[2],
                                       cut.v[0], cut.v[1], cut.v[2]};
    for (const FaceWalk& w : fd.walks) {
        if (w.size() != 6) continue;
        for (int shift = 0; shift < 6; ++shift) {
            bool fwd = true, rev = true;
            for (int i = 0; i < 6; ++i) {
                if (walk_vertex(open, w, shift + i) != hex[i]) fwd = false;
                if (walk_vertex(open, w, shift - i) != hex[i]) rev = false;
            }
            if (fwd || rev) return fill_face_with_apex(open, w);
        }
    }
    throw std::logic_error("cut_and_cap: hexagonal hole not found");
}

} // namespace surfgen
