#pragma once

// Exact integer linear algebra: overflow-checked arithmetic, Bareiss
// (fraction-free) determinants and ranks, and integer kernel bases.
// Sizes here are desk scale (matrices up to ~20 columns), so everything
// is dense int64 with __int128 intermediates.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace ymodt {

using i64 = long long;
using i128 = __int128_t;

using IntMatrix = std::vector<std::vector<i64>>;

inline i64 checked_i64(i128 v, const char* what) {
    if (v > i128(INT64_MAX) || v < i128(INT64_MIN))
        throw std::overflow_error(std::string("integer overflow in ") + what);
    return static_cast<i64>(v);
}

inline i64 mul_checked(i64 a, i64 b) { return checked_i64(i128(a) * i128(b), "multiply"); }

inline int popcount32(uint32_t x) { return __builtin_popcount(x); }

inline i64 binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    i64 r = 1;
    for (int i = 1; i <= k; ++i) r = checked_i64(i128(r) * (n - k + i) / i, "binomial");
    return r;
}

/// (-1)^k
inline i64 sign_pow(int k) { return (k % 2 == 0) ? 1 : -1; }

/// Determinant of a square integer matrix, exact (Bareiss elimination).
inline i64 det_exact(IntMatrix a) {
    const int n = static_cast<int>(a.size());
    if (n == 0) return 1;  // det of the empty matrix
    i64 sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i][k] != 0) { piv = i; break; }
            if (piv < 0) return 0;
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                i128 num = i128(a[i][j]) * a[k][k] - i128(a[i][k]) * a[k][j];
                if (num % prev != 0) throw std::logic_error("Bareiss divisibility failure");
                a[i][j] = checked_i64(num / prev, "determinant");
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return mul_checked(sign, a[n - 1][n - 1]);
}

/// Rank over the rationals via fraction-free elimination.
inline int rank_exact(IntMatrix a) {
    const int rows = static_cast<int>(a.size());
    if (rows == 0) return 0;
    const int cols = static_cast<int>(a[0].size());
    int rank = 0;
    i64 prev = 1;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int i = rank; i < rows; ++i)
            if (a[i][col] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(a[rank], a[piv]);
        for (int i = rank + 1; i < rows; ++i) {
            for (int j = col + 1; j < cols; ++j) {
                i128 num = i128(a[i][j]) * a[rank][col] - i128(a[i][col]) * a[rank][j];
                if (num % prev != 0) throw std::logic_error("Bareiss divisibility failure");
                a[i][j] = checked_i64(num / prev, "rank");
            }
            a[i][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

namespace detail {

struct Rational {
    i64 num = 0, den = 1;
    void normalize() {
        if (den < 0) { num = -num; den = -den; }
        i64 g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }
    static Rational make(i64 n, i64 d) { Rational r{n, d}; r.normalize(); return r; }
    Rational operator+(const Rational& o) const {
        return make(checked_i64(i128(num) * o.den + i128(o.num) * den, "rational add"),
                    mul_checked(den, o.den));
    }
    Rational operator*(const Rational& o) const {
        return make(mul_checked(num, o.num), mul_checked(den, o.den));
    }
    Rational operator-() const { return Rational{-num, den}; }
};

}  // namespace detail

/// Primitive integer basis of the (right) kernel of an r x n matrix.
/// Returns (n - rank) rows, each a primitive integer vector v with a*v = 0.
inline IntMatrix integer_kernel(const IntMatrix& a_in) {
    using detail::Rational;
    const int rows = static_cast<int>(a_in.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(a_in[0].size());
    // Row-reduce over Q.
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) a[i][j] = Rational::make(a_in[i][j], 1);
    std::vector<int> pivot_col;
    int rank = 0;
    for (int col = 0; col < cols && rank < rows; ++col) {
        int piv = -1;
        for (int i = rank; i < rows; ++i)
            if (a[i][col].num != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(a[rank], a[piv]);
        Rational inv = Rational::make(a[rank][col].den, a[rank][col].num);
        for (int j = 0; j < cols; ++j) a[rank][j] = a[rank][j] * inv;
        for (int i = 0; i < rows; ++i) {
            if (i == rank || a[i][col].num == 0) continue;
            Rational f = -a[i][col];
            for (int j = 0; j < cols; ++j) a[i][j] = a[i][j] + f * a[rank][j];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    IntMatrix kernel;
    for (int free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> v(cols, Rational{0, 1});
        v[free] = Rational{1, 1};
        for (int i = 0; i < rank; ++i) v[pivot_col[i]] = -a[i][free];
        i64 lcm = 1;
        for (const auto& x : v) lcm = checked_i64(i128(lcm) / std::gcd(lcm, x.den) * x.den, "kernel lcm");
        std::vector<i64> row(cols);
        i64 g = 0;
        for (int j = 0; j < cols; ++j) {
            row[j] = mul_checked(v[j].num, lcm / v[j].den);
            g = std::gcd(g, row[j] < 0 ? -row[j] : row[j]);
        }
        if (g > 1)
            for (auto& x : row) x /= g;
        kernel.push_back(std::move(row));
    }
    return kernel;
}

}  // namespace ymodt
