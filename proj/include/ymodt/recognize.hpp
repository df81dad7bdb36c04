#pragma once

// Desk-scale graphic realization: given a simple connected matroid, search
// for a simple connected graph on rank+1 vertices whose spanning-tree
// matroid equals it element-for-element.  Backtracking assigns each element
// a vertex pair; pruning uses prefix ranks, triangle ranks and fundamental
// cycles, vertex names are canonicalized by first appearance, and every
// full assignment is certified by exact comparison of the basis sets, so a
// returned graph is never wrong.

#include <cstdint>
#include <optional>
#include <vector>

#include "ymodt/graph.hpp"
#include "ymodt/matroid.hpp"

namespace ymodt {

struct RealizationLimits {
    int max_elements = 18;
    int max_vertices = 9;
    long long node_budget = 1'000'000;
};

namespace detail {

struct RealizationSearch {
    const Matroid& m;
    int n, verts;
    long long budget;
    std::vector<std::pair<int, int>> slot;  // assignment per element
    std::vector<int> prefix_rank;           // matroid rank of {0..k}
    std::optional<Multigraph> found;

    explicit RealizationSearch(const Matroid& mm, long long b)
        : m(mm), n(mm.n), verts(mm.rank + 1), budget(b), slot(mm.n, {-1, -1}) {
        prefix_rank.resize(n);
        uint32_t acc = 0;
        for (int k = 0; k < n; ++k) {
            acc |= 1u << k;
            prefix_rank[k] = rank_of(m, acc);
        }
    }

    int graph_prefix_rank(int upto) const {
        UnionFind uf(verts);
        int r = 0;
        for (int i = 0; i <= upto; ++i)
            if (uf.unite(slot[i].first, slot[i].second)) ++r;
        return r;
    }

    bool triangle_ok(int k) const {
        // rank of {i, j, k} is 2 exactly when the three slots form a triangle.
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) {
                int vs[6] = {slot[i].first, slot[i].second, slot[j].first,
                             slot[j].second, slot[k].first, slot[k].second};
                std::vector<int> u(vs, vs + 6);
                std::sort(u.begin(), u.end());
                u.erase(std::unique(u.begin(), u.end()), u.end());
                bool tri = u.size() == 3;
                if (tri != (rank_of(m, (1u << i) | (1u << j) | (1u << k)) == 2)) return false;
            }
        return true;
    }

    /// When slot k closes a cycle against the earlier edges, that cycle's
    /// element set must be a circuit of the matroid.
    bool fundamental_cycle_ok(int k) const {
        auto [u, v] = slot[k];
        // BFS from u to v over edges 0..k-1, remembering the edge used.
        std::vector<int> via_edge(verts, -1), parent(verts, -1);
        std::vector<bool> seen(verts, false);
        std::vector<int> queue{u};
        seen[u] = true;
        while (!queue.empty() && !seen[v]) {
            int x = queue.back();
            queue.pop_back();
            for (int i = 0; i < k; ++i) {
                int y = -1;
                if (slot[i].first == x) y = slot[i].second;
                if (slot[i].second == x) y = slot[i].first;
                if (y < 0 || seen[y]) continue;
                seen[y] = true;
                parent[y] = x;
                via_edge[y] = i;
                queue.push_back(y);
            }
        }
        if (!seen[v]) return true;  // forest edge, no cycle closed
        uint32_t cyc = 1u << k;
        int steps = 0;
        for (int x = v; x != u; x = parent[x]) {
            cyc |= 1u << via_edge[x];
            ++steps;
        }
        int size = steps + 1;
        // circuit: dependent, and removing the new element leaves an
        // independent set
        return rank_of(m, cyc) == size - 1 && rank_of(m, cyc & ~(1u << k)) == size - 1;
    }

    bool assign(int k, int maxv) {
        if (--budget <= 0) return false;
        if (k == n) {
            if (maxv + 1 != verts) return false;
            Multigraph g;
            for (int x = 0; x < verts; ++x) g.add_vertex("g" + std::to_string(x));
            for (int e = 0; e < n; ++e) g.add_edge(slot[e].first, slot[e].second, m.labels[e]);
            if (from_graph(g).bases != m.bases) return false;  // keep searching
            found = std::move(g);
            return true;
        }
        for (int u = 0; u <= std::min(maxv + 1, verts - 1); ++u) {
            int vlo = u + 1;
            int vhi = (u <= maxv) ? std::min(maxv + 1, verts - 1)
                                  : std::min(maxv + 2, verts - 1);
            for (int v = vlo; v <= vhi; ++v) {
                bool dup = false;
                for (int i = 0; i < k; ++i)
                    if (slot[i] == std::make_pair(u, v)) { dup = true; break; }
                if (dup) continue;
                slot[k] = {u, v};
                int nmax = std::max({maxv, u, v});
                // Remaining elements must be able to introduce the rest.
                if (verts - 1 - nmax > 2 * (n - 1 - k)) { slot[k] = {-1, -1}; continue; }
                if (graph_prefix_rank(k) == prefix_rank[k] && triangle_ok(k) &&
                    fundamental_cycle_ok(k)) {
                    if (assign(k + 1, nmax)) return true;
                    if (budget <= 0) { slot[k] = {-1, -1}; return false; }
                }
                slot[k] = {-1, -1};
            }
        }
        return false;
    }
};

}  // namespace detail

/// Try to realize m as a graph.  Returns a certified realization or nothing
/// (nothing also covers "search budget exhausted").
inline std::optional<Multigraph> find_graph_realization(const Matroid& m,
                                                        RealizationLimits lim = {}) {
    if (m.n > lim.max_elements || m.rank + 1 > lim.max_vertices || m.rank < 1) return std::nullopt;
    // Only simple matroids are searched (the engine simplifies first).
    for (int e = 0; e < m.n; ++e)
        if (is_loop(m, e)) return std::nullopt;
    if (first_parallel_pair(m)) return std::nullopt;
    if (m.n > 1 && !is_connected(m)) return std::nullopt;

    detail::RealizationSearch search(m, lim.node_budget);
    search.assign(0, -1);
    return search.found;
}

}  // namespace ymodt
