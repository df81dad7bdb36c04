#pragma once

// Multigraphs with labeled vertices and edges (loops and parallel edges
// allowed), plus the graph predicates the class calculus needs:
// simplification, connectivity, nexi (cut vertices), cones, fat nexi,
// and edge deletion/contraction.
//
// Vertex and edge labels are opaque strings mapped to dense indices in
// input order; "least vertex" always means least index, which makes every
// operation here deterministic.

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ymodt {

struct Multigraph {
    std::vector<std::string> vertex_labels;
    std::vector<std::string> edge_labels;
    std::vector<std::pair<int, int>> edges;  // endpoint indices; loop iff u == v

    int vertex_count() const { return static_cast<int>(vertex_labels.size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }

    int vertex_index(const std::string& label) const {
        for (int i = 0; i < vertex_count(); ++i)
            if (vertex_labels[i] == label) return i;
        return -1;
    }
    int edge_index(const std::string& label) const {
        for (int i = 0; i < edge_count(); ++i)
            if (edge_labels[i] == label) return i;
        return -1;
    }

    int add_vertex(const std::string& label) {
        int idx = vertex_index(label);
        if (idx >= 0) return idx;
        vertex_labels.push_back(label);
        return vertex_count() - 1;
    }
    void add_edge(int u, int v, std::string label = {}) {
        if (u < 0 || u >= vertex_count() || v < 0 || v >= vertex_count())
            throw std::invalid_argument("edge endpoint is not a declared vertex");
        if (label.empty()) label = "e" + std::to_string(edge_count());
        if (edge_index(label) >= 0)
            throw std::invalid_argument("duplicate edge label: " + label);
        edge_labels.push_back(std::move(label));
        edges.emplace_back(u, v);
    }

    bool has_loop() const {
        for (auto& [u, v] : edges)
            if (u == v) return true;
        return false;
    }
    bool all_loops() const {
        for (auto& [u, v] : edges)
            if (u != v) return false;
        return true;
    }
    /// Adjacent via at least one non-loop edge.
    bool adjacent(int u, int v) const {
        if (u == v) return false;
        for (auto& [a, b] : edges)
            if ((a == u && b == v) || (a == v && b == u)) return true;
        return false;
    }
};

// ---------------------------------------------------------------------------
// Edge-list text format: one edge per line, `u v [label]`; '#' comments.

inline Multigraph parse_edge_list(const std::string& text) {
    Multigraph g;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string u, v, label;
        if (!(ls >> u)) continue;  // blank
        if (!(ls >> v))
            throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                        ": expected `u v [label]`");
        ls >> label;
        std::string extra;
        if (ls >> extra)
            throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                        ": trailing tokens");
        int ui = g.add_vertex(u), vi = g.add_vertex(v);
        try {
            g.add_edge(ui, vi, label);
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("edge list line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return g;
}

inline std::string to_edge_list(const Multigraph& g) {
    std::ostringstream out;
    for (int i = 0; i < g.edge_count(); ++i)
        out << g.vertex_labels[g.edges[i].first] << ' ' << g.vertex_labels[g.edges[i].second]
            << ' ' << g.edge_labels[i] << '\n';
    return out.str();
}

// ---------------------------------------------------------------------------
// Components, simplification.

/// Component partition as vertex-index sets, ordered by least member.
inline std::vector<std::vector<int>> connected_components(const Multigraph& g) {
    const int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> adj(n);
    for (auto& [u, v] : g.edges) {
        if (u == v) continue;
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s}, members;
        comp[s] = static_cast<int>(out.size());
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            members.push_back(v);
            for (int w : adj[v])
                if (comp[w] < 0) {
                    comp[w] = comp[s];
                    stack.push_back(w);
                }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

inline bool is_connected_graph(const Multigraph& g) {
    return connected_components(g).size() <= 1;
}

/// Merge parallel edges, delete loops, drop isolated vertices.
/// Keeps the first edge of each parallel class and all incident vertex labels.
/// Rejects graphs whose edges are all loops.
inline Multigraph simplify(const Multigraph& g) {
    if (g.edge_count() == 0 || g.all_loops())
        throw std::invalid_argument("simplify: graph must have a non-loop edge");
    std::set<std::pair<int, int>> seen;
    std::vector<int> keep_edge;
    for (int i = 0; i < g.edge_count(); ++i) {
        auto [u, v] = g.edges[i];
        if (u == v) continue;
        auto key = std::minmax(u, v);
        if (seen.insert(key).second) keep_edge.push_back(i);
    }
    // Vertices kept in original index order for deterministic labeling.
    std::vector<bool> used(g.vertex_count(), false);
    for (int i : keep_edge) {
        used[g.edges[i].first] = true;
        used[g.edges[i].second] = true;
    }
    Multigraph out;
    for (int x = 0; x < g.vertex_count(); ++x)
        if (used[x]) out.add_vertex(g.vertex_labels[x]);
    for (int i : keep_edge)
        out.add_edge(out.vertex_index(g.vertex_labels[g.edges[i].first]),
                     out.vertex_index(g.vertex_labels[g.edges[i].second]), g.edge_labels[i]);
    return out;
}

// ---------------------------------------------------------------------------
// Nexi, cones, fat nexi.

/// Cut vertices of a connected graph (vertices whose deletion disconnects it).
inline std::vector<int> find_nexi(const Multigraph& g) {
    const int n = g.vertex_count();
    std::vector<int> out;
    if (n <= 2) return out;
    for (int v = 0; v < n; ++v) {
        // Count components of g - v.
        std::vector<std::vector<int>> adj(n);
        for (auto& [a, b] : g.edges) {
            if (a == b || a == v || b == v) continue;
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        std::vector<bool> vis(n, false);
        vis[v] = true;
        int comps = 0;
        for (int s = 0; s < n; ++s) {
            if (vis[s]) continue;
            ++comps;
            std::vector<int> stack{s};
            vis[s] = true;
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                for (int w : adj[x])
                    if (!vis[w]) { vis[w] = true; stack.push_back(w); }
            }
        }
        if (comps >= 2) out.push_back(v);
    }
    return out;
}

/// True iff every other vertex is adjacent to v (loops do not count).
inline bool is_cone_with_apex(const Multigraph& g, int v) {
    if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("is_cone_with_apex: no such vertex");
    std::vector<bool> nb(g.vertex_count(), false);
    nb[v] = true;
    for (auto& [a, b] : g.edges) {
        if (a == v && b != v) nb[b] = true;
        if (b == v && a != v) nb[a] = true;
    }
    for (int w = 0; w < g.vertex_count(); ++w)
        if (!nb[w]) return false;
    return true;
}

struct FatNexusWitness {
    int v0 = -1;
    std::vector<int> part1, part2;  // disjoint, nonempty, part1 ∪ part2 = V \ {v0}
};

/// Check the defining conditions of a witness directly (used by tests).
inline bool is_valid_fat_nexus_witness(const Multigraph& g, const FatNexusWitness& w) {
    const int n = g.vertex_count();
    std::vector<int> side(n, 0);  // 1 / 2, v0 = 0
    if (w.v0 < 0 || w.v0 >= n) return false;
    if (w.part1.empty() || w.part2.empty()) return false;
    for (int x : w.part1) side[x] = 1;
    for (int x : w.part2) {
        if (side[x] != 0) return false;
        side[x] = 2;
    }
    int assigned = static_cast<int>(w.part1.size() + w.part2.size());
    if (assigned != n - 1 || side[w.v0] != 0) return false;
    std::vector<bool> closed_nb(n, false);
    closed_nb[w.v0] = true;
    for (auto& [a, b] : g.edges) {
        if (a == w.v0 && b != w.v0) closed_nb[b] = true;
        if (b == w.v0 && a != w.v0) closed_nb[a] = true;
    }
    for (auto& [a, b] : g.edges) {
        if (a == b) continue;
        if ((side[a] == 1 && side[b] == 2) || (side[a] == 2 && side[b] == 1))
            if (!closed_nb[a] || !closed_nb[b]) return false;
    }
    bool cone = true;
    for (int x = 0; x < n; ++x)
        if (!closed_nb[x]) cone = false;
    if (cone && w.part1.size() == w.part2.size()) return false;
    return true;
}

/// Find a fat nexus of a simple graph, or nothing.
///
/// For a candidate v0 with closed neighborhood V0, a partition
/// {v0} ⊔ V1 ⊔ V2 is admissible iff no edge with an endpoint outside V0
/// crosses between V1 and V2, i.e. V1 and V2 are unions of components of
/// the auxiliary graph H on V \ {v0} whose edges are those not incident
/// to v0 and not contained in V0.  If v0 is an apex, H is edgeless and the
/// parts must additionally have unequal sizes (possible iff |V| >= 4).
/// Deterministic tie-break: smallest v0, then V1 = component of the
/// smallest remaining vertex (its singleton in the apex case).
inline std::optional<FatNexusWitness> find_fat_nexus(const Multigraph& g) {
    const int n = g.vertex_count();
    if (n < 3) return std::nullopt;
    for (int v0 = 0; v0 < n; ++v0) {
        std::vector<bool> in_v0(n, false);
        in_v0[v0] = true;
        for (auto& [a, b] : g.edges) {
            if (a == v0 && b != v0) in_v0[b] = true;
            if (b == v0 && a != v0) in_v0[a] = true;
        }
        bool cone = true;
        for (int x = 0; x < n; ++x)
            if (!in_v0[x]) cone = false;

        if (cone) {
            if (n < 4) continue;
            FatNexusWitness w;
            w.v0 = v0;
            int first = (v0 == 0) ? 1 : 0;
            w.part1 = {first};
            for (int x = 0; x < n; ++x)
                if (x != v0 && x != first) w.part2.push_back(x);
            return w;
        }

        // Components of H.
        std::vector<std::vector<int>> adj(n);
        for (auto& [a, b] : g.edges) {
            if (a == b || a == v0 || b == v0) continue;
            if (in_v0[a] && in_v0[b]) continue;
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        std::vector<int> comp(n, -1);
        int comps = 0;
        for (int s = 0; s < n; ++s) {
            if (s == v0 || comp[s] >= 0) continue;
            std::vector<int> stack{s};
            comp[s] = comps;
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                for (int y : adj[x])
                    if (comp[y] < 0) { comp[y] = comps; stack.push_back(y); }
            }
            ++comps;
        }
        if (comps < 2) continue;
        FatNexusWitness w;
        w.v0 = v0;
        for (int x = 0; x < n; ++x) {
            if (x == v0) continue;
            (comp[x] == 0 ? w.part1 : w.part2).push_back(x);
        }
        return w;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Minor operations.

inline Multigraph delete_edge(const Multigraph& g, int e) {
    if (e < 0 || e >= g.edge_count()) throw std::invalid_argument("delete_edge: no such edge");
    Multigraph out;
    out.vertex_labels = g.vertex_labels;
    for (int i = 0; i < g.edge_count(); ++i)
        if (i != e) out.add_edge(g.edges[i].first, g.edges[i].second, g.edge_labels[i]);
    return out;
}

/// Contract a non-loop edge: endpoints merge into the smaller index,
/// keeping any loops/parallels that arise.
inline Multigraph contract_edge(const Multigraph& g, int e) {
    if (e < 0 || e >= g.edge_count()) throw std::invalid_argument("contract_edge: no such edge");
    auto [u, v] = g.edges[e];
    if (u == v) throw std::invalid_argument("contract_edge: cannot contract a loop");
    int keep = std::min(u, v), gone = std::max(u, v);
    Multigraph out;
    std::vector<int> vmap(g.vertex_count());
    for (int x = 0, idx = 0; x < g.vertex_count(); ++x) {
        if (x == gone) { vmap[x] = -1; continue; }
        out.add_vertex(g.vertex_labels[x]);
        vmap[x] = idx++;
    }
    vmap[gone] = vmap[keep];
    for (int i = 0; i < g.edge_count(); ++i) {
        if (i == e) continue;
        out.add_edge(vmap[g.edges[i].first], vmap[g.edges[i].second], g.edge_labels[i]);
    }
    return out;
}

inline Multigraph delete_edge(const Multigraph& g, const std::string& label) {
    int e = g.edge_index(label);
    if (e < 0) throw std::invalid_argument("delete_edge: unknown edge label " + label);
    return delete_edge(g, e);
}
inline Multigraph contract_edge(const Multigraph& g, const std::string& label) {
    int e = g.edge_index(label);
    if (e < 0) throw std::invalid_argument("contract_edge: unknown edge label " + label);
    return contract_edge(g, e);
}

/// Remove the edges in `mask` (bit i = edge i), keeping all vertices.
inline Multigraph delete_edges_mask(const Multigraph& g, uint32_t mask) {
    Multigraph out;
    out.vertex_labels = g.vertex_labels;
    for (int i = 0; i < g.edge_count(); ++i)
        if (!((mask >> i) & 1u)) out.add_edge(g.edges[i].first, g.edges[i].second, g.edge_labels[i]);
    return out;
}

/// Contract the edges in `mask` one by one (ascending index); edges of the
/// mask that have become loops are deleted, matching matroid contraction.
inline Multigraph contract_edges_mask(const Multigraph& g, uint32_t mask) {
    Multigraph cur = g;
    // Track current index of each original edge by label.
    std::vector<std::string> labels;
    for (int i = 0; i < g.edge_count(); ++i)
        if ((mask >> i) & 1u) labels.push_back(g.edge_labels[i]);
    for (const auto& lab : labels) {
        int e = cur.edge_index(lab);
        if (cur.edges[e].first == cur.edges[e].second)
            cur = delete_edge(cur, e);
        else
            cur = contract_edge(cur, e);
    }
    return cur;
}

}  // namespace ymodt
