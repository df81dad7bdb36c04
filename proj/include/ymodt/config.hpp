#pragma once

// Configurations (integer matrices whose row space lives in K^E) and their
// polynomials: the basis-indexed coefficient map with squared-subdeterminant
// coefficients, graph incidence configurations, Vandermonde realizations of
// uniform matroids, and evaluation over prime fields by monomial sum or by
// the reduced weighted Laplacian.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "ymodt/exact.hpp"
#include "ymodt/graph.hpp"
#include "ymodt/matroid.hpp"

namespace ymodt {

struct Configuration {
    IntMatrix mat;                    // r x n, full row rank over Q
    std::vector<std::string> labels;  // n column labels

    int rows() const { return static_cast<int>(mat.size()); }
    int cols() const { return mat.empty() ? static_cast<int>(labels.size()) : static_cast<int>(mat[0].size()); }
};

/// ψ_W as its basis-indexed coefficient map; coefficients are positive
/// perfect squares (all 1 for graph configurations).
struct ConfigPolynomial {
    int n = 0;
    int rank = 0;
    std::vector<std::pair<uint32_t, i64>> terms;  // (basis mask, coefficient), mask-sorted
};

/// Rows are the incidence vectors of every vertex except the least-index
/// vertex of each component; edge {u,v} with u < v gets -1 at u, +1 at v;
/// loops give zero columns.
inline Configuration incidence_configuration(const Multigraph& g) {
    const int n = g.edge_count();
    auto comps = connected_components(g);
    std::vector<bool> drop(g.vertex_count(), false);
    for (auto& c : comps) drop[c.front()] = true;
    Configuration w;
    w.labels = g.edge_labels;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (drop[v]) continue;
        std::vector<i64> row(n, 0);
        for (int e = 0; e < n; ++e) {
            auto [a, b] = g.edges[e];
            if (a == b) continue;
            int lo = std::min(a, b), hi = std::max(a, b);
            if (v == lo) row[e] = -1;
            if (v == hi) row[e] = 1;
        }
        w.mat.push_back(std::move(row));
    }
    return w;
}

/// r x n Vandermonde matrix on nodes 1..n; its matroid is U_{r,n}.
inline Configuration vandermonde_realization(int r, int n) {
    if (r < 1 || r > n) throw std::invalid_argument("vandermonde: need 1 <= r <= n");
    Configuration w;
    w.labels = detail::default_labels(n);
    for (int i = 0; i < r; ++i) {
        std::vector<i64> row(n);
        for (int j = 0; j < n; ++j) {
            i64 v = 1;
            for (int k = 0; k < i; ++k) v = mul_checked(v, j + 1);
            row[j] = v;
        }
        w.mat.push_back(std::move(row));
    }
    return w;
}

inline Matroid matroid_of(const Configuration& w, int cap = kGroundCap) {
    return from_matrix(w.mat, w.labels, cap);
}

/// Coefficient of x^B is the squared determinant of the column submatrix at B.
inline ConfigPolynomial config_polynomial(const Configuration& w, int cap = kGroundCap) {
    const int r = w.rows();
    const int n = w.cols();
    if (n > cap) throw std::invalid_argument("config_polynomial: ground set exceeds cap");
    ConfigPolynomial poly;
    poly.n = n;
    poly.rank = r;
    if (r == 0) {
        poly.terms.emplace_back(0u, 1);  // ψ = 1
        return poly;
    }
    if (rank_exact(w.mat) != r)
        throw std::invalid_argument("config_polynomial: matrix is not of full row rank");
    std::vector<int> idx(r);
    for (int i = 0; i < r; ++i) idx[i] = i;
    while (true) {
        IntMatrix sub(r, std::vector<i64>(r));
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) sub[i][j] = w.mat[i][idx[j]];
        i64 d = det_exact(sub);
        if (d != 0) {
            uint32_t mask = 0;
            for (int j : idx) mask |= 1u << j;
            poly.terms.emplace_back(mask, mul_checked(d, d));
        }
        int k = r - 1;
        while (k >= 0 && idx[k] == n - r + k) --k;
        if (k < 0) break;
        ++idx[k];
        for (int j = k + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
    }
    std::sort(poly.terms.begin(), poly.terms.end());
    return poly;
}

/// Σ_B c_B Π_{e in B} x_e over GF(p).
inline i64 evaluate_mod_p(const ConfigPolynomial& poly, const std::vector<i64>& point, i64 p) {
    if (static_cast<int>(point.size()) != poly.n)
        throw std::invalid_argument("evaluate_mod_p: point length mismatch");
    i64 acc = 0;
    for (auto& [mask, coeff] : poly.terms) {
        i64 t = coeff % p;
        for (int e = 0; e < poly.n && t != 0; ++e)
            if ((mask >> e) & 1u) t = (t * (point[e] % p)) % p;
        acc = (acc + t) % p;
    }
    return (acc % p + p) % p;
}

// ---------------------------------------------------------------------------
// Laplacian evaluation path for graphs (the Matrix-Tree identity).

namespace detail {

inline i64 pow_mod(i64 b, i64 e, i64 p) {
    i64 r = 1;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

inline i64 det_mod_p(std::vector<i64>& a, int n, i64 p) {
    i64 det = 1;
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i)
            if (a[i * n + c] % p != 0) { piv = i; break; }
        if (piv < 0) return 0;
        if (piv != c) {
            for (int j = c; j < n; ++j) std::swap(a[piv * n + j], a[c * n + j]);
            det = p - det;
        }
        i64 pv = (a[c * n + c] % p + p) % p;
        det = det * pv % p;
        i64 inv = pow_mod(pv, p - 2, p);
        for (int i = c + 1; i < n; ++i) {
            i64 f = (a[i * n + c] % p + p) % p * inv % p;
            if (f == 0) continue;
            for (int j = c; j < n; ++j)
                a[i * n + j] = ((a[i * n + j] - f * a[c * n + j]) % p + p) % p;
        }
    }
    return det % p;
}

}  // namespace detail

/// Per-graph evaluator of ψ_G over GF(p) via the reduced weighted Laplacian
/// (row/column of the least vertex deleted).  Requires a connected graph.
class LaplacianEvaluator {
public:
    LaplacianEvaluator(const Multigraph& g, i64 p) : p_(p), dim_(g.vertex_count() - 1) {
        if (!is_connected_graph(g))
            throw std::invalid_argument("LaplacianEvaluator: graph must be connected");
        n_ = g.edge_count();
        for (int e = 0; e < n_; ++e) {
            auto [u, v] = g.edges[e];
            if (u == v) continue;  // loops never enter ψ_G
            pos_.push_back({e, u - 1, v - 1});  // vertex 0 is the deleted root
        }
        scratch_.resize(static_cast<size_t>(dim_) * dim_);
    }

    i64 operator()(const std::vector<i64>& point) const {
        std::fill(scratch_.begin(), scratch_.end(), 0);
        for (auto& [e, ru, rv] : pos_) {
            i64 x = point[e] % p_;
            if (ru >= 0) scratch_[ru * dim_ + ru] = (scratch_[ru * dim_ + ru] + x) % p_;
            if (rv >= 0) scratch_[rv * dim_ + rv] = (scratch_[rv * dim_ + rv] + x) % p_;
            if (ru >= 0 && rv >= 0) {
                scratch_[ru * dim_ + rv] = (scratch_[ru * dim_ + rv] - x) % p_;
                scratch_[rv * dim_ + ru] = (scratch_[rv * dim_ + ru] - x) % p_;
            }
        }
        return detail::det_mod_p(scratch_, dim_, p_);
    }

    int ground_size() const { return n_; }

private:
    i64 p_;
    int dim_, n_;
    struct Entry { int e, ru, rv; };
    std::vector<Entry> pos_;
    mutable std::vector<i64> scratch_;
};

inline i64 evaluate_graph_via_laplacian(const Multigraph& g, const std::vector<i64>& point, i64 p) {
    return LaplacianEvaluator(g, p)(point);
}

// ---------------------------------------------------------------------------
// Configuration minors needed by the counting identities.

/// Projection of the row space onto the coordinates in `mask`, returned as a
/// full-row-rank integer matrix.
inline Configuration restrict_configuration(const Configuration& w, uint32_t mask) {
    Configuration out;
    for (int j = 0; j < w.cols(); ++j)
        if ((mask >> j) & 1u) out.labels.push_back(w.labels[j]);
    IntMatrix proj;
    for (const auto& row : w.mat) {
        std::vector<i64> r;
        for (int j = 0; j < w.cols(); ++j)
            if ((mask >> j) & 1u) r.push_back(row[j]);
        proj.push_back(std::move(r));
    }
    // Keep a maximal independent subset of the projected rows.
    IntMatrix kept;
    for (auto& row : proj) {
        kept.push_back(row);
        if (rank_exact(kept) != static_cast<int>(kept.size())) kept.pop_back();
    }
    out.mat = std::move(kept);
    return out;
}

/// Orthogonal-complement realization: an integer basis of the kernel of W's
/// rows.  Its matroid is the dual of W's matroid.
inline Configuration kernel_configuration(const Configuration& w) {
    Configuration out;
    out.labels = w.labels;
    if (w.rows() == 0) {
        // Dual of the rank-0 configuration is the full space: identity rows.
        for (int i = 0; i < w.cols(); ++i) {
            std::vector<i64> row(w.cols(), 0);
            row[i] = 1;
            out.mat.push_back(std::move(row));
        }
        return out;
    }
    out.mat = integer_kernel(w.mat);
    return out;
}

}  // namespace ymodt
