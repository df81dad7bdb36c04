#pragma once

// Explicit-basis matroids over a ground set of at most 24 elements.
// Bases are stored as sorted 32-bit masks, which makes rank queries,
// minors and duality plain set algebra.  A matroid may carry the graph
// it came from; minor operations keep graph and bases in step so the
// engine's graph-only vanishing rule stays available on minors.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "ymodt/exact.hpp"
#include "ymodt/graph.hpp"

namespace ymodt {

constexpr int kGroundCap = 24;        // from_graph / from_matrix limit
constexpr int kSubsetEnumCap = 20;    // spanning-subset enumeration limit

struct Matroid {
    int n = 0;     // ground size, elements 0..n-1
    int rank = 0;  // common size of all bases
    std::vector<uint32_t> bases;          // sorted, deduplicated
    std::vector<std::string> labels;      // element labels, size n
    std::shared_ptr<const Multigraph> graph;  // optional; edge i == element i

    uint32_t full_mask() const { return n == 32 ? ~0u : ((1u << n) - 1); }
    i64 basis_count() const { return static_cast<i64>(bases.size()); }
    int nullity() const { return n - rank; }
};

/// Memoization key: ground size plus the sorted basis masks (a labeled
/// identity, not an isomorphism invariant).
struct MatroidKey {
    int n = 0;
    std::vector<uint32_t> bases;
    bool operator==(const MatroidKey& o) const { return n == o.n && bases == o.bases; }
};

struct MatroidKeyHash {
    size_t operator()(const MatroidKey& k) const {
        size_t h = static_cast<size_t>(k.n) * 1099511628211ull;
        for (uint32_t b : k.bases) h = (h ^ b) * 1099511628211ull;
        return h;
    }
};

inline MatroidKey key_of(const Matroid& m) { return MatroidKey{m.n, m.bases}; }

namespace detail {

inline void finalize_bases(std::vector<uint32_t>& bases) {
    std::sort(bases.begin(), bases.end());
    bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
}

inline std::vector<std::string> default_labels(int n) {
    std::vector<std::string> out(n);
    for (int i = 0; i < n; ++i) out[i] = "e" + std::to_string(i);
    return out;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Constructors.

/// Graphic matroid: bases are the maximal spanning forests.
inline Matroid from_graph(const Multigraph& g, int cap = kGroundCap) {
    const int n = g.edge_count();
    if (n > cap) throw std::invalid_argument("from_graph: edge count exceeds cap");
    if (n == 0) throw std::invalid_argument("from_graph: graph has no edges");
    int rank = g.vertex_count() - static_cast<int>(connected_components(g).size());
    Matroid m;
    m.n = n;
    m.rank = rank;
    m.labels = g.edge_labels;
    m.graph = std::make_shared<Multigraph>(g);
    // Enumerate rank-subsets that are acyclic (union-find).
    std::vector<int> idx(rank);
    std::iota(idx.begin(), idx.end(), 0);
    if (rank == 0) {
        m.bases = {0u};
        return m;
    }
    while (true) {
        detail::UnionFind uf(g.vertex_count());
        bool ok = true;
        uint32_t mask = 0;
        for (int i : idx) {
            auto [u, v] = g.edges[i];
            if (u == v || !uf.unite(u, v)) { ok = false; break; }
            mask |= 1u << i;
        }
        if (ok) m.bases.push_back(mask);
        // next combination
        int k = rank - 1;
        while (k >= 0 && idx[k] == n - rank + k) --k;
        if (k < 0) break;
        ++idx[k];
        for (int j = k + 1; j < rank; ++j) idx[j] = idx[j - 1] + 1;
    }
    detail::finalize_bases(m.bases);
    return m;
}

/// Column matroid of an integer matrix with full row rank.
inline Matroid from_matrix(const IntMatrix& rows, std::vector<std::string> labels = {},
                           int cap = kGroundCap) {
    const int r = static_cast<int>(rows.size());
    const int n = r == 0 ? 0 : static_cast<int>(rows[0].size());
    if (n == 0 || n > cap) throw std::invalid_argument("from_matrix: bad column count");
    for (const auto& row : rows)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("from_matrix: ragged rows");
    if (rank_exact(rows) != r)
        throw std::invalid_argument("from_matrix: matrix is not of full row rank");
    Matroid m;
    m.n = n;
    m.rank = r;
    m.labels = labels.empty() ? detail::default_labels(n) : std::move(labels);
    if (static_cast<int>(m.labels.size()) != n)
        throw std::invalid_argument("from_matrix: label count mismatch");
    if (r == 0) {
        m.bases = {0u};
        return m;
    }
    std::vector<int> idx(r);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        IntMatrix sub(r, std::vector<i64>(r));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) sub[i][j] = rows[i][idx[j]];
        if (det_exact(sub) != 0) {
            uint32_t mask = 0;
            for (int j : idx) mask |= 1u << j;
            m.bases.push_back(mask);
        }
        int k = r - 1;
        while (k >= 0 && idx[k] == n - r + k) --k;
        if (k < 0) break;
        ++idx[k];
        for (int j = k + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
    detail::finalize_bases(m.bases);
    if (m.bases.empty()) throw std::logic_error("from_matrix: no basis found");
    return m;
}

// ---------------------------------------------------------------------------
// Rank oracle and friends.

inline int rank_of(const Matroid& m, uint32_t S) {
    int best = 0;
    for (uint32_t b : m.bases) best = std::max(best, popcount32(b & S));
    return best;
}

inline bool is_independent(const Matroid& m, uint32_t S) {
    return rank_of(m, S) == popcount32(S);
}

inline int nullity_of(const Matroid& m, uint32_t S) { return popcount32(S) - rank_of(m, S); }

inline uint32_t closure(const Matroid& m, uint32_t S) {
    int r = rank_of(m, S);
    uint32_t out = S;
    for (int e = 0; e < m.n; ++e) {
        if ((S >> e) & 1u) continue;
        if (rank_of(m, S | (1u << e)) == r) out |= 1u << e;
    }
    return out;
}

inline bool is_loop(const Matroid& m, int e) { return rank_of(m, 1u << e) == 0; }

inline bool is_coloop(const Matroid& m, int e) {
    return rank_of(m, m.full_mask() & ~(1u << e)) == m.rank - 1;
}

// ---------------------------------------------------------------------------
// Minors and duality.  Element labels (and the provenance graph, where it
// still makes sense) follow along; indices re-densify.

namespace detail {

inline Matroid reindex(const Matroid& m, uint32_t kept, std::vector<uint32_t> new_bases,
                       std::shared_ptr<const Multigraph> graph) {
    Matroid out;
    std::vector<int> map(m.n, -1);
    int idx = 0;
    for (int e = 0; e < m.n; ++e)
        if ((kept >> e) & 1u) {
            map[e] = idx++;
            out.labels.push_back(m.labels[e]);
        }
    out.n = idx;
    for (uint32_t b : new_bases) {
        uint32_t nb = 0;
        for (int e = 0; e < m.n; ++e)
            if (((b >> e) & 1u) && map[e] >= 0) nb |= 1u << map[e];
        out.bases.push_back(nb);
    }
    finalize_bases(out.bases);
    out.rank = out.bases.empty() ? 0 : popcount32(out.bases[0]);
    out.graph = std::move(graph);
    return out;
}

}  // namespace detail

/// Delete the elements of S.
inline Matroid del(const Matroid& m, uint32_t S) {
    uint32_t kept = m.full_mask() & ~S;
    if (kept == 0) throw std::invalid_argument("del: cannot delete every element");
    int r = rank_of(m, kept);
    std::vector<uint32_t> nb;
    for (uint32_t b : m.bases) {
        uint32_t t = b & kept;
        if (popcount32(t) == r) nb.push_back(t);
    }
    std::shared_ptr<const Multigraph> graph;
    if (m.graph) graph = std::make_shared<Multigraph>(delete_edges_mask(*m.graph, S));
    return detail::reindex(m, kept, std::move(nb), std::move(graph));
}

/// Contract the elements of S (loops inside S are deleted).
inline Matroid contract(const Matroid& m, uint32_t S) {
    uint32_t kept = m.full_mask() & ~S;
    if (kept == 0) throw std::invalid_argument("contract: cannot contract every element");
    // Fixed maximal independent subset of S, greedy in element order.
    uint32_t is = 0;
    for (int e = 0; e < m.n; ++e) {
        if (!((S >> e) & 1u)) continue;
        if (is_independent(m, is | (1u << e))) is |= 1u << e;
    }
    std::vector<uint32_t> nb;
    for (uint32_t b : m.bases)
        if ((b & S) == is) nb.push_back(b & kept);
    std::shared_ptr<const Multigraph> graph;
    if (m.graph) graph = std::make_shared<Multigraph>(contract_edges_mask(*m.graph, S));
    Matroid out = detail::reindex(m, kept, std::move(nb), std::move(graph));
    if (out.bases.empty()) throw std::logic_error("contract: empty basis family");
    return out;
}

/// Restriction to S (deletion of the complement).
inline Matroid restrict_to(const Matroid& m, uint32_t S) { return del(m, m.full_mask() & ~S); }

/// Dual matroid: bases are the basis complements.  Graph provenance does
/// not transfer.
inline Matroid dual(const Matroid& m) {
    Matroid out;
    out.n = m.n;
    out.rank = m.n - m.rank;
    out.labels = m.labels;
    out.bases.reserve(m.bases.size());
    uint32_t full = m.full_mask();
    for (uint32_t b : m.bases) out.bases.push_back(full & ~b);
    detail::finalize_bases(out.bases);
    return out;
}

// ---------------------------------------------------------------------------
// Element classification and connectivity.

struct ElementTags {
    std::vector<bool> loop, coloop;
    std::vector<uint32_t> parallel_partners, series_partners;  // masks, self excluded
};

inline ElementTags classify_elements(const Matroid& m) {
    ElementTags t;
    t.loop.resize(m.n);
    t.coloop.resize(m.n);
    t.parallel_partners.assign(m.n, 0);
    t.series_partners.assign(m.n, 0);
    for (int e = 0; e < m.n; ++e) {
        t.loop[e] = is_loop(m, e);
        t.coloop[e] = is_coloop(m, e);
    }
    for (int e = 0; e < m.n; ++e)
        for (int f = e + 1; f < m.n; ++f) {
            if (!t.loop[e] && !t.loop[f] && rank_of(m, (1u << e) | (1u << f)) == 1) {
                t.parallel_partners[e] |= 1u << f;
                t.parallel_partners[f] |= 1u << e;
            }
            if (!t.coloop[e] && !t.coloop[f] &&
                rank_of(m, m.full_mask() & ~((1u << e) | (1u << f))) == m.rank - 1) {
                t.series_partners[e] |= 1u << f;
                t.series_partners[f] |= 1u << e;
            }
        }
    return t;
}

/// First parallel pair (e, f) in element order, if any.
inline std::optional<std::pair<int, int>> first_parallel_pair(const Matroid& m) {
    for (int e = 0; e < m.n; ++e) {
        if (is_loop(m, e)) continue;
        for (int f = e + 1; f < m.n; ++f) {
            if (is_loop(m, f)) continue;
            if (rank_of(m, (1u << e) | (1u << f)) == 1) return std::make_pair(e, f);
        }
    }
    return std::nullopt;
}

/// First series pair (e, f) in element order, if any.
inline std::optional<std::pair<int, int>> first_series_pair(const Matroid& m) {
    std::vector<bool> coloop(m.n);
    for (int e = 0; e < m.n; ++e) coloop[e] = is_coloop(m, e);
    for (int e = 0; e < m.n; ++e) {
        if (coloop[e] || is_loop(m, e)) continue;
        for (int f = e + 1; f < m.n; ++f) {
            if (coloop[f] || is_loop(m, f)) continue;
            if (rank_of(m, m.full_mask() & ~((1u << e) | (1u << f))) == m.rank - 1)
                return std::make_pair(e, f);
        }
    }
    return std::nullopt;
}

namespace detail {

/// Components of the matroid via fundamental circuits with respect to the
/// first basis: e ~ f when some fundamental circuit contains both.
inline std::vector<int> matroid_components(int n, const std::vector<uint32_t>& bases) {
    UnionFind uf(n);
    if (!bases.empty()) {
        std::unordered_set<uint32_t> basis_set(bases.begin(), bases.end());
        uint32_t b0 = bases.front();
        for (int e = 0; e < n; ++e) {
            if ((b0 >> e) & 1u) continue;
            // Fundamental circuit of e: {e} plus the f in b0 with b0 - f + e a basis.
            int anchor = e;
            for (int f = 0; f < n; ++f) {
                if (!((b0 >> f) & 1u)) continue;
                uint32_t cand = (b0 & ~(1u << f)) | (1u << e);
                if (basis_set.count(cand)) uf.unite(anchor, f);
            }
        }
    }
    std::vector<int> comp(n);
    for (int e = 0; e < n; ++e) comp[e] = uf.find(e);
    return comp;
}

}  // namespace detail

/// 2-connectivity of the matroid; single-element matroids count as connected.
inline bool is_connected(const Matroid& m) {
    if (m.n <= 0) throw std::invalid_argument("is_connected: empty ground set");
    if (m.n == 1) return true;
    auto comp = detail::matroid_components(m.n, m.bases);
    for (int e = 1; e < m.n; ++e)
        if (comp[e] != comp[0]) return false;
    return true;
}

/// (r, n) iff the bases are exactly the r-subsets.
inline std::optional<std::pair<int, int>> uniform_signature(const Matroid& m) {
    if (m.basis_count() == binomial(m.n, m.rank)) return std::make_pair(m.rank, m.n);
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Spanning connected subsets (the index sets of the stratification sums).

/// All S with closure(S) = E and M|S connected, in decreasing-size order
/// (ties: ascending mask).  For spanning S the restriction's bases are just
/// the bases of M inside S, so the connectivity check needs no rebuild.
inline std::vector<uint32_t> spanning_connected_subsets(const Matroid& m,
                                                        int cap = kSubsetEnumCap) {
    if (m.n > cap) throw std::invalid_argument("spanning_connected_subsets: ground set exceeds cap");
    std::vector<uint32_t> out;
    const uint32_t full = m.full_mask();
    for (uint32_t S = 0; S <= full; ++S) {
        if (rank_of(m, S) != m.rank) continue;  // not spanning
        // Bases of M|S, re-densified within S.
        std::vector<int> pos(m.n, -1);
        int k = 0;
        for (int e = 0; e < m.n; ++e)
            if ((S >> e) & 1u) pos[e] = k++;
        std::vector<uint32_t> sub;
        for (uint32_t b : m.bases) {
            if ((b & S) != b) continue;
            uint32_t t = 0;
            for (int e = 0; e < m.n; ++e)
                if (((b >> e) & 1u)) t |= 1u << pos[e];
            sub.push_back(t);
        }
        detail::finalize_bases(sub);
        if (sub.empty()) continue;
        if (k == 1) {
            out.push_back(S);
            continue;
        }
        auto comp = detail::matroid_components(k, sub);
        bool conn = true;
        for (int e = 1; e < k; ++e)
            if (comp[e] != comp[0]) conn = false;
        if (conn) out.push_back(S);
    }
    std::sort(out.begin(), out.end(), [](uint32_t a, uint32_t b) {
        int pa = popcount32(a), pb = popcount32(b);
        return pa != pb ? pa > pb : a < b;
    });
    return out;
}

/// Independent proper flats (closure(F) = F, F independent, F != E),
/// ascending mask order.
inline std::vector<uint32_t> independent_proper_flats(const Matroid& m) {
    std::unordered_set<uint32_t> indep;
    indep.insert(0);
    // Grow independent sets from subsets of bases.
    for (uint32_t b : m.bases) {
        uint32_t sub = b;
        while (true) {  // all subsets of b
            indep.insert(sub);
            if (sub == 0) break;
            sub = (sub - 1) & b;
        }
    }
    std::vector<uint32_t> out;
    for (uint32_t F : indep) {
        if (F == m.full_mask()) continue;
        if (closure(m, F) == F) out.push_back(F);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace ymodt
