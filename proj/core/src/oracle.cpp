#include "surfgen/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

namespace surfgen {

namespace {

std::uint64_t factorial(int k) {
    std::uint64_t f = 1;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

struct LabeledGraph {
    int n;
    std::vector<std::vector<Vertex>> adj; // sorted neighbor lists
    int edge_count = 0;

    bool connected() const {
        std::vector<bool> seen(n, false);
        std::vector<Vertex> stack{0};
        seen[0] = true;
        int reached = 1;
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex u : adj[v])
                if (!seen[u]) {
                    seen[u] = true;
                    ++reached;
                    stack.push_back(u);
                }
        }
        return reached == n;
    }
};

// Tree edges get sign +1; only co-tree edges range over both signs. Vertex
// flips realize every omitted assignment, so no embedding is lost.
std::vector<std::pair<Vertex, Vertex>> cotree_edges(const LabeledGraph& g) {
    std::vector<bool> seen(g.n, false);
    std::vector<std::pair<Vertex, Vertex>> tree;
    std::vector<Vertex> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex u : g.adj[v])
            if (!seen[u]) {
                seen[u] = true;
                tree.emplace_back(std::min(u, v), std::max(u, v));
                stack.push_back(u);
            }
    }
    std::vector<std::pair<Vertex, Vertex>> cot;
    for (Vertex v = 0; v < g.n; ++v)
        for (Vertex u : g.adj[v]) {
            if (u < v) continue;
            if (std::find(tree.begin(), tree.end(), std::make_pair(v, u)) == tree.end())
                cot.emplace_back(v, u);
        }
    return cot;
}

} // namespace

OracleResult enumerate_all_maps(const SurfaceClass& surface, int n, std::uint64_t budget) {
    OracleResult out;
    out.surface = surface;
    out.n = n;
    if (n < 2) return out;

    std::vector<std::pair<Vertex, Vertex>> all_pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) all_pairs.emplace_back(u, v);
    const int np = static_cast<int>(all_pairs.size());

    std::vector<LabeledGraph> graphs;
    std::uint64_t estimate = 0;
    for (std::uint32_t mask = 0; mask < (1u << np); ++mask) {
        LabeledGraph g;
        g.n = n;
        g.adj.assign(n, {});
        for (int i = 0; i < np; ++i)
            if (mask & (1u << i)) {
                auto [u, v] = all_pairs[i];
                g.adj[u].push_back(v);
                g.adj[v].push_back(u);
                ++g.edge_count;
            }
        if (g.edge_count == 0 || !g.connected()) continue;
        std::uint64_t combos = 1;
        for (Vertex v = 0; v < n; ++v)
            combos *= factorial(static_cast<int>(g.adj[v].size()) - 1);
        combos <<= (g.edge_count - n + 1);
        estimate += combos;
        graphs.push_back(std::move(g));
    }
    if (estimate > budget)
        throw OracleBudgetError("oracle: " + std::to_string(estimate) +
                                " candidate embeddings exceed budget " + std::to_string(budget));

    for (const LabeledGraph& g : graphs) {
        auto cot = cotree_edges(g);
        const int nc = static_cast<int>(cot.size());

        // Odometer over rotation systems: permute each neighbor list's tail,
        // keeping the first entry fixed (cyclic orders, not linear ones).
        std::vector<std::vector<Vertex>> rot = g.adj;
        for (;;) {
            for (std::uint32_t smask = 0; smask < (1u << nc); ++smask) {
                std::vector<std::pair<Vertex, Vertex>> twisted;
                for (int i = 0; i < nc; ++i)
                    if (smask & (1u << i)) twisted.push_back(cot[i]);
                EmbeddedMap m = EmbeddedMap::from_rotations(rot, twisted);
                if (surface_class(m) == surface) out.codes.insert(canonical_code(m));
            }
            int v = 0;
            for (; v < n; ++v)
                if (rot[v].size() > 2 &&
                    std::next_permutation(rot[v].begin() + 1, rot[v].end()))
                    break;
                else
                    std::sort(rot[v].begin(), rot[v].end());
            if (v == n) break;
        }
    }
    return out;
}

} // namespace surfgen
