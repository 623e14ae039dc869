#pragma once

// Smith normal form over Z with tracked unimodular transforms and their
// inverses, plus an SNF-backed integer linear solver. Used for second
// cohomology and for linear systems over Z/m.

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "centra/error.hpp"
#include "centra/field.hpp"

namespace centra {

using IntMat = std::vector<std::vector<Int>>;

inline IntMat int_identity(size_t n) {
    IntMat m(n, std::vector<Int>(n, Int(0)));
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline IntMat int_mul(const IntMat& a, const IntMat& b) {
    if (a.empty() || b.empty()) return {};
    size_t r = a.size(), k = a[0].size(), c = b[0].size();
    if (k != b.size()) throw dimension_error("int_mul shape mismatch");
    IntMat out(r, std::vector<Int>(c, Int(0)));
    for (size_t i = 0; i < r; ++i)
        for (size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (size_t j = 0; j < c; ++j)
                if (b[t][j] != 0) out[i][j] += a[i][t] * b[t][j];
        }
    return out;
}

inline std::vector<Int> int_mul_vec(const IntMat& a, const std::vector<Int>& v) {
    std::vector<Int> out(a.size(), Int(0));
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != v.size()) throw dimension_error("int_mul_vec shape mismatch");
        for (size_t j = 0; j < v.size(); ++j)
            if (a[i][j] != 0 && v[j] != 0) out[i] += a[i][j] * v[j];
    }
    return out;
}

struct SmithResult {
    std::vector<Int> divisors; // diagonal of U*A*V, d1 | d2 | ..., nonnegative
    IntMat U, Uinv;            // rows x rows, U*Uinv = I
    IntMat V, Vinv;            // cols x cols, V*Vinv = I
    size_t rank() const {
        size_t r = 0;
        for (const Int& d : divisors)
            if (d != 0) ++r;
        return r;
    }
};

/// U*A*V = diag(divisors); U, V unimodular with tracked inverses.
/// Left/right transform tracking can be switched off when not needed.
inline SmithResult smith_normal_form(IntMat a, bool track_left = true, bool track_right = true) {
    const size_t R = a.size();
    const size_t C = R == 0 ? 0 : a[0].size();
    SmithResult res;
    if (track_left) {
        res.U = int_identity(R);
        res.Uinv = int_identity(R);
    }
    if (track_right) {
        res.V = int_identity(C);
        res.Vinv = int_identity(C);
    }

    auto row_swap = [&](size_t i, size_t j) {
        std::swap(a[i], a[j]);
        if (!track_left) return;
        std::swap(res.U[i], res.U[j]);
        for (size_t k = 0; k < R; ++k) std::swap(res.Uinv[k][i], res.Uinv[k][j]);
    };
    auto col_swap = [&](size_t i, size_t j) {
        for (size_t k = 0; k < R; ++k) std::swap(a[k][i], a[k][j]);
        if (!track_right) return;
        for (size_t k = 0; k < C; ++k) std::swap(res.V[k][i], res.V[k][j]);
        std::swap(res.Vinv[i], res.Vinv[j]);
    };
    // row i -= q * row j
    auto row_sub = [&](size_t i, size_t j, const Int& q) {
        if (q == 0) return;
        for (size_t k = 0; k < C; ++k) a[i][k] -= q * a[j][k];
        if (!track_left) return;
        for (size_t k = 0; k < R; ++k) res.U[i][k] -= q * res.U[j][k];
        for (size_t k = 0; k < R; ++k) res.Uinv[k][j] += q * res.Uinv[k][i];
    };
    // col i -= q * col j
    auto col_sub = [&](size_t i, size_t j, const Int& q) {
        if (q == 0) return;
        for (size_t k = 0; k < R; ++k) a[k][i] -= q * a[k][j];
        if (!track_right) return;
        for (size_t k = 0; k < C; ++k) res.V[k][i] -= q * res.V[k][j];
        for (size_t k = 0; k < C; ++k) res.Vinv[j][k] += q * res.Vinv[i][k];
    };
    auto row_negate = [&](size_t i) {
        for (size_t k = 0; k < C; ++k) a[i][k] = -a[i][k];
        if (!track_left) return;
        for (size_t k = 0; k < R; ++k) res.U[i][k] = -res.U[i][k];
        for (size_t k = 0; k < R; ++k) res.Uinv[k][i] = -res.Uinv[k][i];
    };

    const size_t N = std::min(R, C);
    for (size_t t = 0; t < N; ++t) {
        // locate smallest-magnitude nonzero entry in the trailing block
        size_t pi = R, pj = C;
        Int best;
        for (size_t i = t; i < R; ++i)
            for (size_t j = t; j < C; ++j) {
                if (a[i][j] == 0) continue;
                Int mag = abs(a[i][j]);
                if (pi == R || mag < best) {
                    best = mag;
                    pi = i;
                    pj = j;
                }
            }
        if (pi == R) break; // trailing block is zero
        if (pi != t) row_swap(pi, t);
        if (pj != t) col_swap(pj, t);

        bool clean = false;
        while (!clean) {
            clean = true;
            for (size_t i = t + 1; i < R; ++i) {
                if (a[i][t] == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), a[i][t].get_mpz_t(), a[t][t].get_mpz_t());
                row_sub(i, t, q);
                if (a[i][t] != 0) {
                    row_swap(i, t); // smaller remainder becomes the pivot
                    clean = false;
                }
            }
            for (size_t j = t + 1; j < C; ++j) {
                if (a[t][j] == 0) continue;
                Int q;
                mpz_fdiv_q(q.get_mpz_t(), a[t][j].get_mpz_t(), a[t][t].get_mpz_t());
                col_sub(j, t, q);
                if (a[t][j] != 0) {
                    col_swap(j, t);
                    clean = false;
                }
            }
            if (!clean) continue;
            // pivot must divide every entry of the trailing block
            for (size_t i = t + 1; i < R && clean; ++i)
                for (size_t j = t + 1; j < C && clean; ++j) {
                    if (a[i][j] % a[t][t] != 0) {
                        row_sub(t, i, Int(-1)); // add row i to pivot row
                        clean = false;
                    }
                }
        }
        if (a[t][t] < 0) row_negate(t);
    }
    res.divisors.assign(N, Int(0));
    for (size_t t = 0; t < N; ++t) res.divisors[t] = a[t][t];
    return res;
}

/// One integer solution of Ax = b, or nullopt if none exists.
inline std::optional<std::vector<Int>> solve_integer(const IntMat& a, const std::vector<Int>& b) {
    const size_t R = a.size();
    const size_t C = R == 0 ? 0 : a[0].size();
    if (b.size() != R) throw dimension_error("solve_integer: rhs length mismatch");
    SmithResult s = smith_normal_form(a);
    std::vector<Int> ub = int_mul_vec(s.U, b);
    std::vector<Int> y(C, Int(0));
    const size_t N = std::min(R, C);
    for (size_t i = 0; i < N; ++i) {
        if (s.divisors[i] == 0) {
            if (ub[i] != 0) return std::nullopt;
        } else {
            if (ub[i] % s.divisors[i] != 0) return std::nullopt;
            y[i] = ub[i] / s.divisors[i];
        }
    }
    for (size_t i = N; i < R; ++i)
        if (ub[i] != 0) return std::nullopt;
    return int_mul_vec(s.V, y);
}

} // namespace centra
