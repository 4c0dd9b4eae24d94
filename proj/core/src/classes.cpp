#include "surfgen/classes.hpp"

#include <algorithm>
#include <vector>

namespace surfgen {

bool is_triangulation(const EmbeddedMap& m, const FaceData& fd) {
    for (const FaceWalk& f : fd.walks) {
        if (f.size() != 3) return false;
        Vertex a = m.vertex_of(f.steps[0].dart);
        Vertex b = m.vertex_of(f.steps[1].dart);
        Vertex c = m.vertex_of(f.steps[2].dart);
        if (a == b || b == c || a == c) return false;
    }
    if (m.vertex_count() == 3 && m.edge_count() == 3 &&
        surface_class(m) == SurfaceClass::sphere())
        return false;
    return true;
}

bool is_triangulation(const EmbeddedMap& m) { return is_triangulation(m, trace_faces(m)); }

bool is_closed_2cell(const EmbeddedMap& m, const FaceData& fd) {
    std::vector<bool> seen(m.vertex_count(), false);
    for (const FaceWalk& f : fd.walks) {
        bool ok = true;
        for (const FaceStep& s : f.steps) {
            Vertex v = m.vertex_of(s.dart);
            if (seen[v]) ok = false;
            seen[v] = true;
        }
        for (const FaceStep& s : f.steps) seen[m.vertex_of(s.dart)] = false;
        if (!ok) return false;
    }
    return true;
}

bool is_closed_2cell(const EmbeddedMap& m) { return is_closed_2cell(m, trace_faces(m)); }

bool is_polyhedral(const EmbeddedMap& m, const FaceData& fd) {
    if (!is_closed_2cell(m, fd)) return false;
    const int nf = fd.face_count();
    std::vector<std::vector<Vertex>> fverts(nf);
    std::vector<std::vector<EdgeId>> fedges(nf);
    for (int i = 0; i < nf; ++i) {
        for (const FaceStep& s : fd.walks[i].steps) {
            fverts[i].push_back(m.vertex_of(s.dart));
            fedges[i].push_back(m.edge_of(s.dart));
        }
        std::sort(fverts[i].begin(), fverts[i].end());
        std::sort(fedges[i].begin(), fedges[i].end());
    }
    auto intersection_size = [](const auto& a, const auto& b) {
        std::size_t i = 0, j = 0, n = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i] < b[j]) ++i;
            else if (b[j] < a[i]) ++j;
            else ++n, ++i, ++j;
        }
        return n;
    };
    for (int i = 0; i < nf; ++i)
        for (int j = i + 1; j < nf; ++j) {
            std::size_t sv = intersection_size(fverts[i], fverts[j]);
            std::size_t se = intersection_size(fedges[i], fedges[j]);
            bool ok = (sv == 0 && se == 0) || (sv == 1 && se == 0) || (sv == 2 && se == 1);
            if (!ok) return false;
        }
    return true;
}

bool is_polyhedral(const EmbeddedMap& m) { return is_polyhedral(m, trace_faces(m)); }

namespace {

bool connected_without(const EmbeddedMap& m, const std::vector<bool>& removed) {
    const int n = m.vertex_count();
    Vertex start = -1;
    int alive = 0;
    for (Vertex v = 0; v < n; ++v)
        if (!removed[v]) {
            if (start < 0) start = v;
            ++alive;
        }
    if (alive == 0) return false;
    std::vector<bool> seen(n, false);
    std::vector<Vertex> stack{start};
    seen[start] = true;
    int reached = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (int i = 0; i < m.degree(v); ++i) {
            Vertex u = m.head_of(m.rotation_dart(v, i));
            if (!removed[u] && !seen[u]) {
                seen[u] = true;
                ++reached;
                stack.push_back(u);
            }
        }
    }
    return reached == alive;
}

} // namespace

bool is_2connected(const EmbeddedMap& m) {
    const int n = m.vertex_count();
    if (n < 3 || !m.is_connected()) return false;
    std::vector<bool> removed(n, false);
    for (Vertex v = 0; v < n; ++v) {
        removed[v] = true;
        bool ok = connected_without(m, removed);
        removed[v] = false;
        if (!ok) return false;
    }
    return true;
}

bool is_3connected(const EmbeddedMap& m) {
    const int n = m.vertex_count();
    if (n < 4 || !is_2connected(m)) return false;
    std::vector<bool> removed(n, false);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) {
            removed[u] = removed[v] = true;
            bool ok = connected_without(m, removed);
            removed[u] = removed[v] = false;
            if (!ok) return false;
        }
    return true;
}

} // namespace surfgen
