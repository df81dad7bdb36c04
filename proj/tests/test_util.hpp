#pragma once

// Shared test helpers: a deterministic RNG, random multigraph generation,
// and brute-force oracles kept independent of the library's algorithms.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ymodt/graph.hpp"
#include "ymodt/matroid.hpp"

namespace ymodt_test {

using namespace ymodt;

struct Rng {
    uint64_t s;
    explicit Rng(uint64_t seed) : s(seed) {}
    uint32_t next() {
        s = s * 6364136223846793005ull + 1442695040888963407ull;
        return static_cast<uint32_t>(s >> 33);
    }
    int uniform(int n) { return static_cast<int>(next() % static_cast<uint32_t>(n)); }
};

inline Multigraph random_multigraph(Rng& rng, int n_vertices, int n_edges, bool allow_loops) {
    Multigraph g;
    for (int i = 0; i < n_vertices; ++i) g.add_vertex("v" + std::to_string(i));
    for (int e = 0; e < n_edges; ++e) {
        int u = rng.uniform(n_vertices);
        int v = rng.uniform(n_vertices);
        if (!allow_loops)
            while (v == u) v = rng.uniform(n_vertices);
        g.add_edge(u, v);
    }
    return g;
}

/// Random connected simple graph (retries until connected).
inline Multigraph random_connected_simple(Rng& rng, int n_vertices, int extra_edges) {
    while (true) {
        Multigraph g;
        for (int i = 0; i < n_vertices; ++i) g.add_vertex("v" + std::to_string(i));
        // random spanning tree then extra edges
        for (int v = 1; v < n_vertices; ++v) g.add_edge(rng.uniform(v), v);
        int attempts = 0;
        while (extra_edges > 0 && attempts < 50) {
            int u = rng.uniform(n_vertices), v = rng.uniform(n_vertices);
            ++attempts;
            if (u == v || g.adjacent(u, v)) continue;
            g.add_edge(std::min(u, v), std::max(u, v));
            --extra_edges;
        }
        if (is_connected_graph(g)) return g;
    }
}

/// Brute-force fat-nexus existence straight from the defining conditions,
/// trying every vertex and every bipartition.
inline std::optional<FatNexusWitness> brute_force_fat_nexus(const Multigraph& g) {
    const int n = g.vertex_count();
    for (int v0 = 0; v0 < n; ++v0) {
        std::vector<int> rest;
        for (int x = 0; x < n; ++x)
            if (x != v0) rest.push_back(x);
        int k = static_cast<int>(rest.size());
        for (uint32_t mask = 1; mask + 1 < (1u << k); ++mask) {
            FatNexusWitness w;
            w.v0 = v0;
            for (int i = 0; i < k; ++i)
                (((mask >> i) & 1u) ? w.part1 : w.part2).push_back(rest[i]);
            if (is_valid_fat_nexus_witness(g, w)) return w;
        }
    }
    return std::nullopt;
}

/// Spanning-tree count straight from the definition (no matroid code).
inline long long brute_force_tree_count(const Multigraph& g) {
    const int n = g.edge_count();
    int comps = static_cast<int>(connected_components(g).size());
    int rank = g.vertex_count() - comps;
    long long count = 0;
    for (uint32_t S = 0; S < (1u << n); ++S) {
        if (ymodt::popcount32(S) != rank) continue;
        // acyclic?
        std::vector<int> parent(g.vertex_count());
        for (int i = 0; i < g.vertex_count(); ++i) parent[i] = i;
        std::function<int(int)> find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        bool ok = true;
        for (int e = 0; e < n && ok; ++e) {
            if (!((S >> e) & 1u)) continue;
            auto [u, v] = g.edges[e];
            int ru = find(u), rv = find(v);
            if (ru == rv)
                ok = false;
            else
                parent[rv] = ru;
        }
        if (ok) ++count;
    }
    return count;
}

}  // namespace ymodt_test
