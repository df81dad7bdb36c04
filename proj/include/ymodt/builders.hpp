#pragma once

// Named graph families used as canonical fixtures: cycles, bananas, wheels,
// divided wheels, complete (bipartite) graphs, the octahedron, and the
// fixed fan-pair graphs together with their planar duals (the duals are
// shipped as authored edge lists; the library itself never embeds graphs).

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ymodt/graph.hpp"

namespace ymodt {

inline std::string vlabel(int i) { return std::to_string(i); }

/// Path with n edges (the tree T_n used for free matroids).
inline Multigraph make_path(int n) {
    if (n < 1) throw std::invalid_argument("path: need n >= 1");
    Multigraph g;
    for (int i = 0; i <= n; ++i) g.add_vertex(vlabel(i));
    for (int i = 0; i < n; ++i) g.add_edge(i, i + 1);
    return g;
}

/// Cycle C_n (n >= 2; C_2 is a pair of parallel edges, C_1 a loop).
inline Multigraph make_cycle(int n) {
    if (n < 1) throw std::invalid_argument("cycle: need n >= 1");
    Multigraph g;
    if (n == 1) {
        g.add_vertex("0");
        g.add_edge(0, 0);
        return g;
    }
    for (int i = 0; i < n; ++i) g.add_vertex(vlabel(i));
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

/// Banana B_n: two vertices joined by n parallel edges.
inline Multigraph make_banana(int n) {
    if (n < 1) throw std::invalid_argument("banana: need n >= 1");
    Multigraph g;
    g.add_vertex("0");
    g.add_vertex("1");
    for (int i = 0; i < n; ++i) g.add_edge(0, 1);
    return g;
}

/// Wheel W_n: hub 0 joined to an n-cycle (2n edges; spokes first).
inline Multigraph make_wheel(int n) {
    if (n < 3) throw std::invalid_argument("wheel: need n >= 3");
    Multigraph g;
    g.add_vertex("h");
    for (int i = 0; i < n; ++i) g.add_vertex("r" + std::to_string(i));
    for (int i = 0; i < n; ++i) g.add_edge(0, 1 + i, "s" + std::to_string(i));
    for (int i = 0; i < n; ++i) g.add_edge(1 + i, 1 + (i + 1) % n, "c" + std::to_string(i));
    return g;
}

namespace detail {
/// Subdivide edge e of g into two edges through a fresh mid vertex.
inline Multigraph subdivide_edge(const Multigraph& g, int e) {
    auto [u, v] = g.edges[e];
    if (u == v) throw std::invalid_argument("subdivide_edge: loop");
    Multigraph out;
    out.vertex_labels = g.vertex_labels;
    int mid = out.add_vertex("m_" + g.edge_labels[e]);
    for (int i = 0; i < g.edge_count(); ++i) {
        if (i == e) {
            out.add_edge(g.edges[i].first, mid, g.edge_labels[i] + "a");
            out.add_edge(mid, g.edges[i].second, g.edge_labels[i] + "b");
        } else {
            out.add_edge(g.edges[i].first, g.edges[i].second, g.edge_labels[i]);
        }
    }
    return out;
}
}  // namespace detail

/// Divided wheel: W_n with every edge split into two edges in series.
inline Multigraph make_divided_wheel(int n) {
    Multigraph g = make_wheel(n);
    // Subdivide the original 2n edges; indices shift as we go, so work by label.
    std::vector<std::string> labels = g.edge_labels;
    for (const auto& lab : labels) g = detail::subdivide_edge(g, g.edge_index(lab));
    return g;
}

/// Divided wheel with one spoke left undivided (4n-1 edges).
inline Multigraph make_divided_wheel_over_spoke(int n) {
    Multigraph g = make_wheel(n);
    std::vector<std::string> labels = g.edge_labels;
    for (const auto& lab : labels)
        if (lab != "s0") g = detail::subdivide_edge(g, g.edge_index(lab));
    return g;
}

/// The negative-value variant: one rim half-edge of the graph above is
/// divided once more (4n edges).
inline Multigraph make_divided_wheel_over_spoke_neg(int n) {
    Multigraph g = make_divided_wheel_over_spoke(n);
    int e = g.edge_index("c0a");
    return detail::subdivide_edge(g, e);
}

inline Multigraph make_complete(int n) {
    if (n < 2) throw std::invalid_argument("complete: need n >= 2");
    Multigraph g;
    for (int i = 0; i < n; ++i) g.add_vertex(vlabel(i));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

inline Multigraph make_complete_bipartite(int m, int n) {
    if (m < 1 || n < 1) throw std::invalid_argument("complete bipartite: need parts >= 1");
    Multigraph g;
    for (int i = 0; i < m; ++i) g.add_vertex("a" + std::to_string(i));
    for (int j = 0; j < n; ++j) g.add_vertex("b" + std::to_string(j));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) g.add_edge(i, m + j);
    return g;
}

/// Octahedron K_{2,2,2}: antipodal pairs (0,3), (1,4), (2,5).
inline Multigraph make_octahedron() {
    Multigraph g;
    for (int i = 0; i < 6; ++i) g.add_vertex(vlabel(i));
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            if (j - i != 3) g.add_edge(i, j);
    return g;
}

/// Two non-adjacent hubs a, b joined to every vertex of a k-path.
inline Multigraph make_fan_pair(int k) {
    if (k < 2) throw std::invalid_argument("fan_pair: need k >= 2");
    Multigraph g;
    g.add_vertex("a");
    g.add_vertex("b");
    for (int i = 1; i <= k; ++i) g.add_vertex("p" + std::to_string(i));
    for (int i = 1; i <= k; ++i) {
        g.add_edge(0, 1 + i);
        g.add_edge(1, 1 + i);
    }
    for (int i = 1; i < k; ++i) g.add_edge(1 + i, 2 + i);
    return g;
}

/// As make_fan_pair plus the hub-hub edge (a cone with apex a).
inline Multigraph make_fan_pair_pole(int k) {
    Multigraph g = make_fan_pair(k);
    g.add_edge(0, 1, "pole");
    return g;
}

/// Planar dual of make_fan_pair(k) (authored edge list; face-traced once by
/// hand): rungs t_i b_i between two paths t_1..t_{k-1}, b_1..b_{k-1} that
/// are joined at both ends through an outer vertex o.
inline Multigraph make_fan_pair_dual(int k) {
    if (k < 2) throw std::invalid_argument("fan_pair_dual: need k >= 2");
    Multigraph g;
    g.add_vertex("o");
    for (int i = 1; i < k; ++i) {
        g.add_vertex("t" + std::to_string(i));
        g.add_vertex("b" + std::to_string(i));
    }
    auto t = [&](int i) { return g.vertex_index("t" + std::to_string(i)); };
    auto b = [&](int i) { return g.vertex_index("b" + std::to_string(i)); };
    g.add_edge(t(1), 0);
    g.add_edge(b(1), 0);
    for (int i = 1; i + 1 < k; ++i) {
        g.add_edge(t(i), t(i + 1));
        g.add_edge(b(i), b(i + 1));
    }
    g.add_edge(t(k - 1), 0);
    g.add_edge(b(k - 1), 0);
    for (int i = 1; i < k; ++i) g.add_edge(t(i), b(i));
    return g;
}

/// Planar dual of make_fan_pair_pole(k): a ladder with k-1 rungs whose two
/// rails share both endpoints l, r, plus the l-r edge.  k = 3 gives the
/// triangular prism; k = 4 is the series-free graph with class -2.
inline Multigraph make_fan_pair_pole_dual(int k) {
    if (k < 2) throw std::invalid_argument("fan_pair_pole_dual: need k >= 2");
    Multigraph g;
    g.add_vertex("l");
    g.add_vertex("r");
    for (int i = 1; i < k; ++i) {
        g.add_vertex("t" + std::to_string(i));
        g.add_vertex("b" + std::to_string(i));
    }
    auto t = [&](int i) { return g.vertex_index("t" + std::to_string(i)); };
    auto b = [&](int i) { return g.vertex_index("b" + std::to_string(i)); };
    g.add_edge(0, 1, "pole");
    g.add_edge(0, t(1));
    g.add_edge(0, b(1));
    for (int i = 1; i + 1 < k; ++i) {
        g.add_edge(t(i), t(i + 1));
        g.add_edge(b(i), b(i + 1));
    }
    g.add_edge(t(k - 1), 1);
    g.add_edge(b(k - 1), 1);
    for (int i = 1; i < k; ++i) g.add_edge(t(i), b(i));
    return g;
}

inline Multigraph make_prism() { return make_fan_pair_pole_dual(3); }

/// Prism plus one extra edge between the two triangles (between vertices
/// that are not already matched to each other).
inline Multigraph make_prism_chord() {
    Multigraph g = make_prism();
    g.add_edge(g.vertex_index("t1"), g.vertex_index("b2"), "chord");
    return g;
}

/// C_4 plus one diagonal.
inline Multigraph make_square_with_diagonal() {
    Multigraph g = make_cycle(4);
    g.add_edge(0, 2, "diag");
    return g;
}

// ---------------------------------------------------------------------------
// Builder expressions, e.g. "C 5", "K 3 3", "Whats 4", "octahedron".

inline Multigraph build_graph(const std::string& expr) {
    std::istringstream in(expr);
    std::string name;
    if (!(in >> name)) throw std::invalid_argument("empty builder expression");
    std::vector<int> args;
    int x;
    while (in >> x) args.push_back(x);
    auto need = [&](size_t k) {
        if (args.size() != k)
            throw std::invalid_argument("builder " + name + ": expected " + std::to_string(k) +
                                        " argument(s)");
    };
    if (name == "C") { need(1); return make_cycle(args[0]); }
    if (name == "B") { need(1); return make_banana(args[0]); }
    if (name == "W") { need(1); return make_wheel(args[0]); }
    if (name == "Whats") { need(1); return make_divided_wheel(args[0]); }
    if (name == "WhatsOverF") { need(1); return make_divided_wheel_over_spoke(args[0]); }
    if (name == "WhatsOverFNeg") { need(1); return make_divided_wheel_over_spoke_neg(args[0]); }
    if (name == "K") {
        if (args.size() == 1) return make_complete(args[0]);
        need(2);
        return make_complete_bipartite(args[0], args[1]);
    }
    if (name == "path" || name == "T") { need(1); return make_path(args[0]); }
    if (name == "octahedron") { need(0); return make_octahedron(); }
    if (name == "prism") { need(0); return make_prism(); }
    if (name == "prism_chord") { need(0); return make_prism_chord(); }
    if (name == "square_diag") { need(0); return make_square_with_diagonal(); }
    if (name == "fan_pair") { need(1); return make_fan_pair(args[0]); }
    if (name == "fan_pair_pole") { need(1); return make_fan_pair_pole(args[0]); }
    if (name == "fan_pair_dual") { need(1); return make_fan_pair_dual(args[0]); }
    if (name == "fan_pair_pole_dual") { need(1); return make_fan_pair_pole_dual(args[0]); }
    throw std::invalid_argument("unknown builder: " + name);
}

}  // namespace ymodt
