#pragma once

// Normalized 2-cocycles on a finite group with values in mu_m (written
// additively as exponents mod m), the coboundary relation, and second
// cohomology via Smith normal form of the boundary maps.
//
// Cohomology classes are taken relative to coboundaries of cochains with
// values in mu_{m*exp(H)}: a mu_m-valued cocycle is trivial here exactly
// when it is a coboundary over the ground field k (any f with df = c has
// values of order dividing m*exp(H)). This matches H^2(H, k*) restricted
// to mu_m-valued representatives.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "centra/error.hpp"
#include "centra/field.hpp"
#include "centra/group.hpp"
#include "centra/snf.hpp"

namespace centra {

struct Cocycle2 {
    Group group;
    unsigned modulus = 1;
    std::vector<int> table; // n*n exponents in [0, m)

    int at(unsigned f, unsigned g) const { return table[f * group.n + g]; }
    Scalar value(FieldSpec field, unsigned f, unsigned g) const {
        return root_of_unity(field, modulus, at(f, g));
    }
    bool is_zero() const {
        for (int v : table)
            if (v != 0) return false;
        return true;
    }
    bool operator==(const Cocycle2& o) const {
        return group.same_table(o.group) && modulus == o.modulus && table == o.table;
    }
};

inline int mod_reduce(long v, unsigned m) {
    long r = v % static_cast<long>(m);
    if (r < 0) r += m;
    return static_cast<int>(r);
}

/// Validate the cocycle condition (witness triple on failure) and
/// normalization. A table with a nonzero value at (e,e) is normalized on
/// ingestion by subtracting it when auto_normalize is set.
inline Cocycle2 check_cocycle(const Group& h, unsigned m, std::vector<int> table,
                              bool auto_normalize = true) {
    if (m == 0) throw validation_error("cocycle modulus must be >= 1");
    if (table.size() != static_cast<size_t>(h.n) * h.n)
        throw validation_error("cocycle table must be |H| x |H|");
    for (int& v : table) v = mod_reduce(v, m);
    const unsigned n = h.n;
    for (unsigned f = 0; f < n; ++f)
        for (unsigned g = 0; g < n; ++g)
            for (unsigned k = 0; k < n; ++k) {
                long lhs = table[f * n + g] + table[h.mul(f, g) * n + k];
                long rhs = table[g * n + k] + table[f * n + h.mul(g, k)];
                if (mod_reduce(lhs - rhs, m) != 0)
                    throw validation_error("cocycle condition fails at triple (" + h.names[f] +
                                           "," + h.names[g] + "," + h.names[k] + ")");
            }
    int c0 = table[h.identity * n + h.identity];
    if (c0 != 0) {
        if (!auto_normalize)
            throw validation_error("cocycle not normalized: c(e,e) = " + std::to_string(c0));
        for (int& v : table) v = mod_reduce(v - c0, m);
    }
    for (unsigned g = 0; g < n; ++g)
        if (table[h.identity * n + g] != 0 || table[g * n + h.identity] != 0)
            throw validation_error("cocycle not normalized at element " + h.names[g]);
    return Cocycle2{h, m, std::move(table)};
}

inline Cocycle2 zero_cocycle(const Group& h, unsigned m) {
    return Cocycle2{h, m, std::vector<int>(static_cast<size_t>(h.n) * h.n, 0)};
}

inline Cocycle2 cocycle_add(const Cocycle2& a, const Cocycle2& b) {
    if (!a.group.same_table(b.group) || a.modulus != b.modulus)
        throw validation_error("cocycle_add: incompatible cocycles");
    std::vector<int> t(a.table.size());
    for (size_t i = 0; i < t.size(); ++i) t[i] = mod_reduce(a.table[i] + b.table[i], a.modulus);
    return Cocycle2{a.group, a.modulus, std::move(t)};
}

inline Cocycle2 cocycle_sub(const Cocycle2& a, const Cocycle2& b) {
    if (!a.group.same_table(b.group) || a.modulus != b.modulus)
        throw validation_error("cocycle_sub: incompatible cocycles");
    std::vector<int> t(a.table.size());
    for (size_t i = 0; i < t.size(); ++i) t[i] = mod_reduce(a.table[i] - b.table[i], a.modulus);
    return Cocycle2{a.group, a.modulus, std::move(t)};
}

/// Coboundary of a 1-cochain f (exponents mod m, f(e) = 0).
inline Cocycle2 coboundary(const Group& h, unsigned m, const std::vector<int>& f) {
    if (f.size() != h.n) throw validation_error("coboundary: cochain length != |H|");
    std::vector<int> t(static_cast<size_t>(h.n) * h.n, 0);
    for (unsigned x = 0; x < h.n; ++x)
        for (unsigned y = 0; y < h.n; ++y)
            t[x * h.n + y] = mod_reduce(static_cast<long>(f[x]) + f[y] - f[h.mul(x, y)], m);
    return Cocycle2{h, m, std::move(t)};
}

namespace detail {

struct BoundaryData {
    std::vector<unsigned> nt;  // nontrivial elements, ascending
    std::vector<int> pos;      // element -> position in nt, -1 for identity
    IntMat d1;                 // (n1^2) x n1
    IntMat d2;                 // (n1^3) x (n1^2)
};

inline BoundaryData boundary_matrices(const Group& h) {
    BoundaryData bd;
    bd.pos.assign(h.n, -1);
    for (unsigned g = 0; g < h.n; ++g)
        if (g != h.identity) {
            bd.pos[g] = static_cast<int>(bd.nt.size());
            bd.nt.push_back(g);
        }
    const size_t n1 = bd.nt.size();
    bd.d1.assign(n1 * n1, std::vector<Int>(n1, Int(0)));
    for (size_t i = 0; i < n1; ++i)
        for (size_t j = 0; j < n1; ++j) {
            std::vector<Int>& row = bd.d1[i * n1 + j];
            row[i] += 1;
            row[j] += 1;
            unsigned p = h.mul(bd.nt[i], bd.nt[j]);
            if (bd.pos[p] >= 0) row[bd.pos[p]] -= 1;
        }
    bd.d2.assign(n1 * n1 * n1, std::vector<Int>(n1 * n1, Int(0)));
    auto coord = [&](unsigned x, unsigned y) -> long {
        if (bd.pos[x] < 0 || bd.pos[y] < 0) return -1; // normalized entry, identically zero
        return static_cast<long>(bd.pos[x]) * n1 + bd.pos[y];
    };
    for (size_t i = 0; i < n1; ++i)
        for (size_t j = 0; j < n1; ++j)
            for (size_t k = 0; k < n1; ++k) {
                std::vector<Int>& row = bd.d2[(i * n1 + j) * n1 + k];
                unsigned x = bd.nt[i], y = bd.nt[j], z = bd.nt[k];
                // (dc)(x,y,z) = c(y,z) - c(xy,z) + c(x,yz) - c(x,y)
                long c;
                if ((c = coord(y, z)) >= 0) row[c] += 1;
                if ((c = coord(h.mul(x, y), z)) >= 0) row[c] -= 1;
                if ((c = coord(x, h.mul(y, z))) >= 0) row[c] += 1;
                if ((c = coord(x, y)) >= 0) row[c] -= 1;
            }
    return bd;
}

struct H2Lattice {
    BoundaryData bd;
    IntMat bl;                 // basis of the cocycle lattice, N x N (columns)
    std::vector<Int> bl_scale; // bl = V2 * diag(bl_scale)
    IntMat v2inv;
    SmithResult w;             // SNF of the relation matrix
    std::vector<Int> divisors; // nontrivial elementary divisors (> 1)
};

inline H2Lattice h2_lattice(const Group& h, unsigned m) {
    H2Lattice lat;
    lat.bd = boundary_matrices(h);
    const size_t n1 = lat.bd.nt.size();
    const size_t N = n1 * n1;
    const Int mm(m);
    // Cocycle lattice L = {c in Z^N : D2 c = 0 mod m}; basis V2 * diag(s),
    // s_i = m / gcd(d_i, m).
    SmithResult s2 = smith_normal_form(lat.bd.d2, /*track_left=*/false, /*track_right=*/true);
    lat.bl_scale.assign(N, Int(1));
    for (size_t i = 0; i < s2.divisors.size() && i < N; ++i) {
        Int g = gcd(s2.divisors[i], mm);
        lat.bl_scale[i] = mm / g;
    }
    lat.bl.assign(N, std::vector<Int>(N, Int(0)));
    for (size_t i = 0; i < N; ++i)
        for (size_t j = 0; j < N; ++j) lat.bl[i][j] = s2.V[i][j] * lat.bl_scale[j];
    lat.v2inv = s2.Vinv;

    // Effective coboundaries: K = {f in Z^n1 : D1 f = 0 mod e}, T = D1 * K / e,
    // where e = exp(H). S = span(T) + m Z^N.
    const unsigned e = h.exponent();
    const Int ee(e);
    SmithResult s1 = smith_normal_form(lat.bd.d1, false, true);
    IntMat bk(n1, std::vector<Int>(n1, Int(0)));
    for (size_t i = 0; i < n1; ++i)
        for (size_t j = 0; j < n1; ++j) {
            Int scale = 1;
            if (j < s1.divisors.size()) {
                Int g = gcd(s1.divisors[j], ee);
                scale = ee / g;
            }
            bk[i][j] = s1.V[i][j] * scale;
        }
    IntMat t = int_mul(lat.bd.d1, bk);
    for (auto& row : t)
        for (Int& v : row) {
            if (v % ee != 0) throw validation_error("internal: coboundary lattice not divisible");
            v /= ee;
        }
    // generators of S: [T | mI], expressed in the L-basis: W = diag(1/s) * V2inv * [T | mI]
    IntMat gens(N, std::vector<Int>(n1 + N, Int(0)));
    for (size_t i = 0; i < N; ++i) {
        for (size_t j = 0; j < n1; ++j) gens[i][j] = t[i][j];
        gens[i][n1 + i] = mm;
    }
    IntMat w = int_mul(lat.v2inv, gens);
    for (size_t i = 0; i < N; ++i)
        for (Int& v : w[i]) {
            if (v % lat.bl_scale[i] != 0)
                throw validation_error("internal: coboundary not inside cocycle lattice");
            v /= lat.bl_scale[i];
        }
    lat.w = smith_normal_form(std::move(w), true, false);
    for (const Int& d : lat.w.divisors) {
        if (d == 0) throw validation_error("internal: H^2 quotient not finite");
        if (d > 1) lat.divisors.push_back(d);
    }
    return lat;
}

} // namespace detail

/// Nontrivial elementary divisors of H^2(H, mu_m) (trivial group -> empty).
inline std::vector<Int> cohomology_group(const Group& h, unsigned m, unsigned bound = 16) {
    if (h.n > bound)
        throw bound_error("cohomology bound exceeded: |H| = " + std::to_string(h.n));
    if (h.n == 1) return {};
    return detail::h2_lattice(h, m).divisors;
}

/// One representative per cohomology class, zero cocycle first,
/// enumerated in lexicographic class-coordinate order.
inline std::vector<Cocycle2> cocycle_representatives(const Group& h, unsigned m,
                                                     unsigned bound = 16,
                                                     size_t max_classes = 4096) {
    if (h.n > bound)
        throw bound_error("cohomology bound exceeded: |H| = " + std::to_string(h.n));
    if (h.n == 1) return {zero_cocycle(h, m)};
    detail::H2Lattice lat = detail::h2_lattice(h, m);
    const size_t n1 = lat.bd.nt.size();
    const size_t N = n1 * n1;
    // class count
    size_t count = 1;
    for (const Int& d : lat.divisors) {
        count *= d.get_ui();
        if (count > max_classes)
            throw bound_error("too many cohomology classes (> " + std::to_string(max_classes) + ")");
    }
    // positions of nontrivial divisors on the SNF diagonal of W
    std::vector<size_t> free_pos;
    for (size_t i = 0; i < lat.w.divisors.size(); ++i)
        if (lat.w.divisors[i] > 1) free_pos.push_back(i);
    std::vector<Cocycle2> reps;
    std::vector<unsigned> tuple(free_pos.size(), 0);
    while (true) {
        // y = Uinv_W * t, cocycle = BL * y reduced mod m
        std::vector<Int> t(N, Int(0));
        for (size_t i = 0; i < free_pos.size(); ++i) t[free_pos[i]] = tuple[i];
        std::vector<Int> y = int_mul_vec(lat.w.Uinv, t);
        std::vector<Int> c = int_mul_vec(lat.bl, y);
        std::vector<int> table(static_cast<size_t>(h.n) * h.n, 0);
        for (size_t i = 0; i < n1; ++i)
            for (size_t j = 0; j < n1; ++j) {
                Int v = c[i * n1 + j] % m;
                if (v < 0) v += m;
                table[lat.bd.nt[i] * h.n + lat.bd.nt[j]] = static_cast<int>(v.get_si());
            }
        reps.push_back(check_cocycle(h, m, std::move(table), false));
        // next tuple (lexicographic, last index fastest)
        size_t k = free_pos.size();
        while (k > 0) {
            --k;
            if (++tuple[k] < lat.w.divisors[free_pos[k]].get_ui()) break;
            tuple[k] = 0;
            if (k == 0) return reps;
        }
        if (free_pos.empty()) return reps;
    }
}

/// Witness 1-cochain with c = df over Z/m (strict sense), or nullopt.
inline std::optional<std::vector<int>> is_coboundary(const Cocycle2& c) {
    const Group& h = c.group;
    if (h.n == 1) return std::vector<int>{0};
    detail::BoundaryData bd = detail::boundary_matrices(h);
    const size_t n1 = bd.nt.size();
    const size_t N = n1 * n1;
    IntMat a(N, std::vector<Int>(n1 + N, Int(0)));
    for (size_t i = 0; i < N; ++i) {
        for (size_t j = 0; j < n1; ++j) a[i][j] = bd.d1[i][j];
        a[i][n1 + i] = c.modulus;
    }
    std::vector<Int> rhs(N, Int(0));
    for (size_t i = 0; i < n1; ++i)
        for (size_t j = 0; j < n1; ++j) rhs[i * n1 + j] = c.at(bd.nt[i], bd.nt[j]);
    auto x = solve_integer(a, rhs);
    if (!x) return std::nullopt;
    std::vector<int> f(h.n, 0);
    for (size_t j = 0; j < n1; ++j) f[bd.nt[j]] = mod_reduce((*x)[j].get_si(), c.modulus);
    return f;
}

struct KStarWitness {
    std::vector<int> f;  // exponents mod `modulus`
    unsigned modulus;    // m * exp(H); df realizes c inside mu_modulus
};

/// Witness that c is trivial in H^2(H, k*): f with values in mu_{m exp(H)}
/// and df = c (under the inclusion mu_m into mu_{m exp(H)}), or nullopt.
inline std::optional<KStarWitness> is_coboundary_kstar(const Cocycle2& c) {
    const Group& h = c.group;
    const unsigned e = h.exponent();
    const unsigned M = c.modulus * e;
    if (h.n == 1) return KStarWitness{std::vector<int>{0}, M};
    detail::BoundaryData bd = detail::boundary_matrices(h);
    const size_t n1 = bd.nt.size();
    const size_t N = n1 * n1;
    IntMat a(N, std::vector<Int>(n1 + N, Int(0)));
    for (size_t i = 0; i < N; ++i) {
        for (size_t j = 0; j < n1; ++j) a[i][j] = bd.d1[i][j];
        a[i][n1 + i] = M;
    }
    std::vector<Int> rhs(N, Int(0));
    for (size_t i = 0; i < n1; ++i)
        for (size_t j = 0; j < n1; ++j)
            rhs[i * n1 + j] = static_cast<long>(c.at(bd.nt[i], bd.nt[j])) * e;
    auto x = solve_integer(a, rhs);
    if (!x) return std::nullopt;
    KStarWitness w;
    w.modulus = M;
    w.f.assign(h.n, 0);
    for (size_t j = 0; j < n1; ++j) w.f[bd.nt[j]] = mod_reduce((*x)[j].get_si(), M);
    return w;
}

/// Classes agree in H^2(H, k*)?
inline bool cohomologous_kstar(const Cocycle2& a, const Cocycle2& b) {
    return is_coboundary_kstar(cocycle_sub(a, b)).has_value();
}

// ---------------------------------------------------------------------------
// The action table of A(H,F,gamma,eps): h(e_f) = eps_h(f) e_{hfh^-1}.

struct EpsilonTable {
    Group h;                        // the group H (own table)
    std::vector<unsigned> f_elems;  // positions of F inside H, sorted
    unsigned modulus = 1;
    std::vector<int> table;         // |H| x |F| exponents

    int at(unsigned hh, size_t f_pos) const { return table[hh * f_elems.size() + f_pos]; }
    size_t f_index(unsigned f_elem) const {
        auto it = std::lower_bound(f_elems.begin(), f_elems.end(), f_elem);
        if (it == f_elems.end() || *it != f_elem)
            throw validation_error("element not in F");
        return static_cast<size_t>(it - f_elems.begin());
    }
};

/// For F = H the action table is determined by gamma:
/// eps_h(f) = gamma(h,f) - gamma(hfh^-1, h).
inline EpsilonTable epsilon_from_gamma(const Group& h, const Cocycle2& gamma) {
    if (!gamma.group.same_table(h)) throw validation_error("epsilon_from_gamma: cocycle not on H");
    EpsilonTable eps;
    eps.h = h;
    eps.modulus = gamma.modulus;
    eps.f_elems.resize(h.n);
    std::iota(eps.f_elems.begin(), eps.f_elems.end(), 0u);
    eps.table.assign(static_cast<size_t>(h.n) * h.n, 0);
    for (unsigned hh = 0; hh < h.n; ++hh)
        for (unsigned f = 0; f < h.n; ++f) {
            unsigned cf = h.conj(hh, f);
            eps.table[hh * h.n + f] =
                mod_reduce(static_cast<long>(gamma.at(hh, f)) - gamma.at(cf, hh), gamma.modulus);
        }
    return eps;
}

/// Trivial action table (all exponents zero) for arbitrary F <| H.
inline EpsilonTable zero_epsilon(const Group& h, std::vector<unsigned> f_elems, unsigned m) {
    EpsilonTable eps;
    eps.h = h;
    eps.f_elems = std::move(f_elems);
    eps.modulus = m;
    eps.table.assign(eps.h.n * eps.f_elems.size(), 0);
    return eps;
}

} // namespace centra
