#pragma once

// Independent test oracles. These deliberately avoid the library's
// computation paths: cohomology by exhaustive cochain enumeration (with
// sound pruning), Smith divisors by minor gcds, nullspaces by a separate
// elimination, subgroups by subset filtering.

#include <map>
#include <set>
#include <vector>

#include "centra/centra.hpp"

namespace oracle {

using centra::Group;
using centra::Int;

// ---------------------------------------------------------------------------
// Cohomology: enumerate every normalized mu_m cochain table; a branch is cut
// only when an already fully-determined cocycle equation fails, so exactly
// the cocycles are counted.

struct CocycleSearch {
    const Group& h;
    unsigned m;
    std::vector<unsigned> nt;
    std::vector<int> pos; // element -> variable block position, -1 for identity
    // conditions as coordinate index lists with signs: sum == 0 mod m
    struct Cond {
        std::vector<std::pair<size_t, int>> terms;
        size_t last_var = 0;
    };
    std::vector<Cond> conds;
    size_t nvars;

    explicit CocycleSearch(const Group& hh, unsigned mm) : h(hh), m(mm) {
        pos.assign(h.n, -1);
        for (unsigned g = 0; g < h.n; ++g)
            if (g != h.identity) {
                pos[g] = static_cast<int>(nt.size());
                nt.push_back(g);
            }
        size_t n1 = nt.size();
        nvars = n1 * n1;
        auto var = [&](unsigned x, unsigned y) -> long {
            if (pos[x] < 0 || pos[y] < 0) return -1;
            return static_cast<long>(pos[x]) * n1 + pos[y];
        };
        for (unsigned f = 0; f < h.n; ++f)
            for (unsigned g = 0; g < h.n; ++g)
                for (unsigned k = 0; k < h.n; ++k) {
                    Cond c;
                    long v;
                    if ((v = var(f, g)) >= 0) c.terms.push_back({static_cast<size_t>(v), +1});
                    if ((v = var(h.mul(f, g), k)) >= 0) c.terms.push_back({static_cast<size_t>(v), +1});
                    if ((v = var(g, k)) >= 0) c.terms.push_back({static_cast<size_t>(v), -1});
                    if ((v = var(f, h.mul(g, k))) >= 0) c.terms.push_back({static_cast<size_t>(v), -1});
                    if (c.terms.empty()) continue;
                    size_t last = 0;
                    for (auto& [idx, s] : c.terms) last = std::max(last, idx);
                    c.last_var = last;
                    conds.push_back(std::move(c));
                }
    }

    template <typename OnSolution>
    void search(OnSolution&& on_solution) const {
        std::vector<std::vector<const Cond*>> by_last(nvars);
        for (const Cond& c : conds) by_last[c.last_var].push_back(&c);
        std::vector<int> val(nvars, 0);
        dfs(0, val, by_last, on_solution);
    }

private:
    template <typename OnSolution>
    void dfs(size_t v, std::vector<int>& val,
             const std::vector<std::vector<const Cond*>>& by_last, OnSolution& on_solution) const {
        if (v == nvars) {
            on_solution(val);
            return;
        }
        for (int x = 0; x < static_cast<int>(m); ++x) {
            val[v] = x;
            bool ok = true;
            for (const Cond* c : by_last[v]) {
                long acc = 0;
                for (auto& [idx, s] : c->terms) acc += s * val[idx];
                if (((acc % static_cast<long>(m)) + m) % m != 0) {
                    ok = false;
                    break;
                }
            }
            if (ok) dfs(v + 1, val, by_last, on_solution);
        }
    }
};

inline size_t count_cocycles(const Group& h, unsigned m) {
    if (h.n == 1) return 1;
    CocycleSearch s(h, m);
    size_t count = 0;
    s.search([&](const std::vector<int>&) { ++count; });
    return count;
}

/// Distinct mu_m-valued tables df/e for 1-cochains f with values in
/// mu_{m*e}, e = exp(H). These are exactly the k*-coboundaries among the
/// mu_m cocycles.
inline size_t count_kstar_coboundaries(const Group& h, unsigned m) {
    if (h.n == 1) return 1;
    const unsigned e = h.exponent();
    const unsigned big = m * e;
    std::vector<unsigned> nt;
    std::vector<int> pos(h.n, -1);
    for (unsigned g = 0; g < h.n; ++g)
        if (g != h.identity) {
            pos[g] = static_cast<int>(nt.size());
            nt.push_back(g);
        }
    const size_t n1 = nt.size();
    // conditions determined at their last variable: f(x)+f(y)-f(xy) == 0 mod e
    struct Cond {
        long x, y, xy; // variable indices, -1 for identity slot (value 0)
    };
    std::vector<std::vector<Cond>> by_last(n1);
    for (size_t i = 0; i < n1; ++i)
        for (size_t j = 0; j < n1; ++j) {
            unsigned p = h.mul(nt[i], nt[j]);
            Cond c{static_cast<long>(i), static_cast<long>(j), pos[p]};
            size_t last = std::max(i, j);
            if (pos[p] >= 0) last = std::max(last, static_cast<size_t>(pos[p]));
            by_last[last].push_back(c);
        }
    std::set<std::vector<int>> tables;
    std::vector<int> f(n1, 0);
    std::function<void(size_t)> dfs = [&](size_t v) {
        if (v == n1) {
            std::vector<int> table(n1 * n1, 0);
            for (size_t i = 0; i < n1; ++i)
                for (size_t j = 0; j < n1; ++j) {
                    unsigned p = h.mul(nt[i], nt[j]);
                    long d = f[i] + f[j] - (pos[p] >= 0 ? f[pos[p]] : 0);
                    long red = ((d % static_cast<long>(big)) + big) % big;
                    table[i * n1 + j] = static_cast<int>((red / e) % m);
                }
            tables.insert(std::move(table));
            return;
        }
        for (int x = 0; x < static_cast<int>(big); ++x) {
            f[v] = x;
            bool ok = true;
            for (const Cond& c : by_last[v]) {
                long d = f[c.x] + f[c.y] - (c.xy >= 0 ? f[c.xy] : 0);
                if (((d % static_cast<long>(e)) + e) % e != 0) {
                    ok = false;
                    break;
                }
            }
            if (ok) dfs(v + 1);
        }
    };
    dfs(0);
    return tables.size();
}

inline size_t h2_order(const Group& h, unsigned m) {
    return count_cocycles(h, m) / count_kstar_coboundaries(h, m);
}

// ---------------------------------------------------------------------------
// Smith divisors via gcds of k x k minors: e_k = d_k / d_{k-1}.

inline Int minor_gcd(const std::vector<std::vector<Int>>& a, size_t k) {
    size_t r = a.size(), c = a.empty() ? 0 : a[0].size();
    // enumerate k-subsets of rows and columns
    std::vector<size_t> rows(k), cols(k);
    Int g = 0;
    std::function<Int(const std::vector<size_t>&, const std::vector<size_t>&)> det =
        [&](const std::vector<size_t>& rs, const std::vector<size_t>& cs) -> Int {
        if (rs.size() == 1) return a[rs[0]][cs[0]];
        Int acc = 0;
        int sign = 1;
        for (size_t i = 0; i < rs.size(); ++i) {
            std::vector<size_t> rs2;
            for (size_t t = 0; t < rs.size(); ++t)
                if (t != i) rs2.push_back(rs[t]);
            std::vector<size_t> cs2(cs.begin() + 1, cs.end());
            acc += sign * a[rs[i]][cs[0]] * det(rs2, cs2);
            sign = -sign;
        }
        return acc;
    };
    std::function<void(size_t, size_t)> pick_cols = [&](size_t from, size_t got) {
        if (got == k) {
            g = gcd(g, det(rows, cols));
            return;
        }
        for (size_t j = from; j < c; ++j) {
            cols[got] = j;
            pick_cols(j + 1, got + 1);
        }
    };
    std::function<void(size_t, size_t)> pick_rows = [&](size_t from, size_t got) {
        if (got == k) {
            pick_cols(0, 0);
            return;
        }
        for (size_t i = from; i < r; ++i) {
            rows[got] = i;
            pick_rows(i + 1, got + 1);
        }
    };
    pick_rows(0, 0);
    return abs(g);
}

/// Elementary divisors from minor gcds (zeros padded at the end).
inline std::vector<Int> divisors_via_minors(const std::vector<std::vector<Int>>& a) {
    size_t r = a.size(), c = a.empty() ? 0 : a[0].size();
    size_t n = std::min(r, c);
    std::vector<Int> out;
    Int prev(1);
    for (size_t k = 1; k <= n; ++k) {
        Int dk = minor_gcd(a, k);
        if (dk == 0) {
            while (out.size() < n) out.push_back(Int(0));
            return out;
        }
        out.push_back(dk / prev);
        prev = dk;
    }
    return out;
}

// ---------------------------------------------------------------------------
// A second, naive nullspace: eliminate with explicit column scans and
// verify membership directly.

inline size_t nullity_by_elimination(const centra::Mat& m0) {
    using namespace centra;
    Mat m = m0;
    size_t r = 0;
    for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        size_t piv = m.rows();
        for (size_t i = r; i < m.rows(); ++i)
            if (!m.at(i, c).is_zero()) {
                piv = i;
                break;
            }
        if (piv == m.rows()) continue;
        for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(r, j));
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m.at(i, c).is_zero()) continue;
            Scalar f = m.at(i, c) / m.at(r, c);
            for (size_t j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        ++r;
    }
    return m.cols() - r;
}

// ---------------------------------------------------------------------------
// Subgroups by filtering all subsets (|G| <= 12 or so).

inline size_t count_subgroups_bruteforce(const Group& g) {
    size_t count = 0;
    for (unsigned mask = 1; mask < (1u << g.n); ++mask) {
        if (!(mask & (1u << g.identity))) continue;
        std::vector<unsigned> elems;
        for (unsigned i = 0; i < g.n; ++i)
            if (mask & (1u << i)) elems.push_back(i);
        if (centra::is_subgroup(g, elems)) ++count;
    }
    return count;
}

} // namespace oracle
