#pragma once

// Independent verification by counting GF(p)-points of the hypersurface X,
// its complement Y, and the torus part Y° in projective space.  A claimed
// class n mod T forces |Y(F_p)| ≡ n (mod p-1); the congruence checks and
// CRT reconstruction below exercise exactly that.  Counting iterates the
// canonical projective representatives (first nonzero coordinate = 1);
// graphs use the reduced-Laplacian determinant as the evaluation path.

#include <cstdint>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "ymodt/config.hpp"
#include "ymodt/exact.hpp"
#include "ymodt/graph.hpp"
#include "ymodt/matroid.hpp"

namespace ymodt {

inline const std::vector<i64>& supported_primes() {
    static const std::vector<i64> ps = {3, 5, 7, 11, 13};
    return ps;
}

inline bool is_supported_prime(i64 p) {
    for (i64 q : supported_primes())
        if (q == p) return true;
    return false;
}

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct PointCounts {
    i64 p = 0;
    i64 n_projective = 0;  // (p^n - 1)/(p - 1)
    i64 n_x = 0;           // ψ = 0
    i64 n_y = 0;           // ψ ≠ 0
    i64 n_ytorus = 0;      // ψ ≠ 0 with every coordinate nonzero
};

constexpr i64 kDefaultBudget = 100'000'000;

namespace detail {

inline i64 projective_size(i64 p, int n, i64 budget) {
    i64 total = 0, power = 1;
    for (int k = 0; k < n; ++k) {
        total += power;
        if (total > budget) throw BudgetExceeded("point-count budget exceeded");
        power = mul_checked(power, p);
    }
    return total;
}

/// Iterate representatives x_0 = ... = x_{k-1} = 0, x_k = 1, the rest free.
template <typename Eval>
inline PointCounts count_with(int n, i64 p, i64 budget, const Eval& eval) {
    if (!is_supported_prime(p)) throw std::invalid_argument("unsupported prime");
    PointCounts out;
    out.p = p;
    out.n_projective = projective_size(p, n, budget);
    std::vector<i64> x(n, 0);
    for (int k = n - 1; k >= 0; --k) {
        std::fill(x.begin(), x.end(), 0);
        x[k] = 1;
        while (true) {
            i64 v = eval(x);
            if (v == 0)
                ++out.n_x;
            else {
                ++out.n_y;
                if (k == 0) {
                    bool torus = true;
                    for (int i = 1; i < n; ++i)
                        if (x[i] == 0) { torus = false; break; }
                    if (torus) ++out.n_ytorus;
                }
            }
            int pos = n - 1;
            while (pos > k && x[pos] == p - 1) x[pos--] = 0;
            if (pos == k) break;
            ++x[pos];
        }
    }
    if (out.n_x + out.n_y != out.n_projective)
        throw std::logic_error("point count mismatch: X + Y != P^{n-1}");
    return out;
}

}  // namespace detail

/// Count via the monomial sum of the configuration polynomial.
inline PointCounts count_points(const ConfigPolynomial& poly, i64 p, i64 budget = kDefaultBudget) {
    // Reduce coefficients once.
    std::vector<std::pair<uint32_t, i64>> terms;
    terms.reserve(poly.terms.size());
    for (auto& [mask, c] : poly.terms) terms.emplace_back(mask, ((c % p) + p) % p);
    auto eval = [&](const std::vector<i64>& x) -> i64 {
        i64 acc = 0;
        for (auto& [mask, c] : terms) {
            if (c == 0) continue;
            i64 t = c;
            uint32_t mm = mask;
            while (mm) {
                int e = __builtin_ctz(mm);
                mm &= mm - 1;
                t = t * x[e] % p;
                if (t == 0) break;
            }
            acc += t;
        }
        return acc % p;
    };
    return detail::count_with(poly.n, p, budget, eval);
}

/// Count for a connected graph via the reduced weighted Laplacian.
inline PointCounts count_points(const Multigraph& g, i64 p, i64 budget = kDefaultBudget) {
    LaplacianEvaluator eval(g, p);
    return detail::count_with(g.edge_count(), p, budget,
                              [&](const std::vector<i64>& x) { return eval(x); });
}

/// True when some basis coefficient vanishes mod p, i.e. the mod-p matroid
/// differs from the rational one and counts say nothing about the class.
inline bool realization_degenerate_mod_p(const ConfigPolynomial& poly, i64 p) {
    for (auto& [mask, c] : poly.terms)
        if (c % p == 0) return true;
    return false;
}

// ---------------------------------------------------------------------------
// Congruence checks and CRT reconstruction.

struct CongruenceReport {
    bool ok = false;
    i64 p = 0;
    i64 modulus = 0;          // p - 1
    i64 residue_counted = 0;  // |Y(F_p)| mod (p-1)
    i64 residue_claimed = 0;
};

inline CongruenceReport check_congruence(const PointCounts& counts, i64 claimed) {
    CongruenceReport r;
    r.p = counts.p;
    r.modulus = counts.p - 1;
    r.residue_counted = ((counts.n_y % r.modulus) + r.modulus) % r.modulus;
    r.residue_claimed = ((claimed % r.modulus) + r.modulus) % r.modulus;
    r.ok = r.residue_counted == r.residue_claimed;
    return r;
}

/// Same congruence applied to the torus count.
inline CongruenceReport check_congruence_torus(const PointCounts& counts, i64 claimed) {
    CongruenceReport r;
    r.p = counts.p;
    r.modulus = counts.p - 1;
    r.residue_counted = ((counts.n_ytorus % r.modulus) + r.modulus) % r.modulus;
    r.residue_claimed = ((claimed % r.modulus) + r.modulus) % r.modulus;
    r.ok = r.residue_counted == r.residue_claimed;
    return r;
}

struct CrtResult {
    enum class Status { Unique, Ambiguous, Inconsistent, Empty } status = Status::Empty;
    i64 value = 0;                 // set when Unique
    i64 modulus = 0, residue = 0;  // merged congruence
    std::vector<i64> candidates;   // all matches within the bound
};

/// Merge congruences x ≡ r_i (mod m_i) (moduli need not be coprime) and
/// look for the integers with |x| <= bound satisfying all of them.
inline CrtResult crt_reconstruct(const std::vector<std::pair<i64, i64>>& residues, i64 bound) {
    if (bound <= 0) throw std::invalid_argument("crt_reconstruct: bound must be positive");
    CrtResult out;
    if (residues.empty()) return out;
    i64 mod = 1, rem = 0;
    for (auto& [m, r] : residues) {
        if (m <= 0) throw std::invalid_argument("crt_reconstruct: modulus must be positive");
        i64 g = std::gcd(mod, m);
        i64 diff = ((r - rem) % m + m) % m;
        if (diff % g != 0) {
            out.status = CrtResult::Status::Inconsistent;
            return out;
        }
        i64 lcm = mod / g * m;
        // Solve rem + mod*t ≡ r (mod m).
        i64 m2 = m / g;
        i64 a = (mod / g) % m2, need = (diff / g) % m2, t = 0;
        for (i64 cand = 0; cand < m2; ++cand)  // moduli are tiny
            if (a * cand % m2 == need) { t = cand; break; }
        rem = (rem + mod % lcm * (t % lcm)) % lcm;
        mod = lcm;
    }
    out.modulus = mod;
    out.residue = ((rem % mod) + mod) % mod;
    i64 first = out.residue - ((out.residue + bound) / mod) * mod;
    for (i64 x = first; x <= bound; x += mod)
        if (x >= -bound) out.candidates.push_back(x);
    if (out.candidates.empty())
        out.status = CrtResult::Status::Inconsistent;
    else if (out.candidates.size() == 1) {
        out.status = CrtResult::Status::Unique;
        out.value = out.candidates.front();
    } else
        out.status = CrtResult::Status::Ambiguous;
    return out;
}

// ---------------------------------------------------------------------------
// Exact count-level identities.

struct StratificationReport {
    bool stratification_ok = false;  // |Y| = Σ over spanning S of |Y°(W|S)|
    bool cremona_ok = false;         // |Y°(W)| = |Y°(W^perp)|
    i64 p = 0;
    i64 n_y = 0;
    i64 sum_torus_parts = 0;
    i64 n_ytorus = 0;
    i64 n_ytorus_dual = 0;
};

/// Exact identities at counting level (not mod anything):
/// the stratification sum over all spanning subsets, and the torus-part
/// agreement between a configuration and an orthogonal-complement
/// realization of its dual.
inline StratificationReport check_stratification_counts(const Configuration& w, i64 p,
                                                        i64 budget = kDefaultBudget) {
    Matroid m = matroid_of(w);
    if (m.rank == 0) throw std::invalid_argument("check_stratification_counts: rank 0");
    StratificationReport rep;
    rep.p = p;
    ConfigPolynomial poly = config_polynomial(w);
    PointCounts full = count_points(poly, p, budget);
    rep.n_y = full.n_y;
    rep.n_ytorus = full.n_ytorus;
    for (uint32_t S = 0; S <= m.full_mask(); ++S) {
        if (rank_of(m, S) != m.rank) continue;
        if (S == m.full_mask()) {
            rep.sum_torus_parts += full.n_ytorus;
            continue;
        }
        Configuration sub = restrict_configuration(w, S);
        rep.sum_torus_parts += count_points(config_polynomial(sub), p, budget).n_ytorus;
    }
    rep.stratification_ok = rep.sum_torus_parts == rep.n_y;
    Configuration dual_w = kernel_configuration(w);
    rep.n_ytorus_dual = count_points(config_polynomial(dual_w), p, budget).n_ytorus;
    rep.cremona_ok = rep.n_ytorus_dual == rep.n_ytorus;
    return rep;
}

}  // namespace ymodt
