#pragma once

// Finite groups as validated Cayley tables, subgroup/conjugacy/coset
// machinery, and the built-in catalog generated from permutations.

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "centra/error.hpp"

namespace centra {

struct Group {
    unsigned n = 1;
    unsigned identity = 0;
    std::vector<std::string> names;  // size n
    std::vector<unsigned> table;     // n*n, table[i*n+j] = i*j
    std::vector<unsigned> inverse_;  // size n

    unsigned mul(unsigned i, unsigned j) const { return table[i * n + j]; }
    unsigned inv(unsigned i) const { return inverse_[i]; }
    unsigned conj(unsigned g, unsigned x) const { return mul(mul(g, x), inv(g)); }

    bool same_table(const Group& o) const {
        return n == o.n && identity == o.identity && table == o.table;
    }
    unsigned element_order(unsigned g) const {
        unsigned k = 1, x = g;
        while (x != identity) {
            x = mul(x, g);
            ++k;
        }
        return k;
    }
    unsigned exponent() const {
        unsigned e = 1;
        for (unsigned g = 0; g < n; ++g) e = static_cast<unsigned>(std::lcm(e, element_order(g)));
        return e;
    }
    unsigned index_of(const std::string& name) const {
        for (unsigned i = 0; i < n; ++i)
            if (names[i] == name) return i;
        throw validation_error("no element named '" + name + "'");
    }
    bool is_abelian() const {
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = i + 1; j < n; ++j)
                if (mul(i, j) != mul(j, i)) return false;
        return true;
    }
};

/// Validate all group axioms exhaustively; throws with a witness.
inline Group validate_group(std::vector<unsigned> table, unsigned identity,
                            std::vector<std::string> names) {
    size_t n2 = table.size();
    unsigned n = 0;
    while (static_cast<size_t>(n) * n < n2) ++n;
    if (static_cast<size_t>(n) * n != n2 || n == 0)
        throw validation_error("table is not square");
    if (names.empty()) {
        for (unsigned i = 0; i < n; ++i) names.push_back("g" + std::to_string(i));
    }
    if (names.size() != n) throw validation_error("names length != order");
    if (identity >= n) throw validation_error("identity index out of range");
    for (unsigned v : table)
        if (v >= n) throw validation_error("table entry out of range");
    // Latin square
    for (unsigned i = 0; i < n; ++i) {
        std::vector<bool> seen_row(n, false), seen_col(n, false);
        for (unsigned j = 0; j < n; ++j) {
            unsigned r = table[i * n + j], c = table[j * n + i];
            if (seen_row[r])
                throw validation_error("not a latin square: row " + std::to_string(i) +
                                       " repeats element " + std::to_string(r));
            if (seen_col[c])
                throw validation_error("not a latin square: column " + std::to_string(i) +
                                       " repeats element " + std::to_string(c));
            seen_row[r] = seen_col[c] = true;
        }
    }
    // identity
    for (unsigned i = 0; i < n; ++i)
        if (table[identity * n + i] != i || table[i * n + identity] != i)
            throw validation_error("identity axiom fails at element " + std::to_string(i));
    // associativity, O(n^3)
    for (unsigned a = 0; a < n; ++a)
        for (unsigned b = 0; b < n; ++b)
            for (unsigned c = 0; c < n; ++c)
                if (table[table[a * n + b] * n + c] != table[a * n + table[b * n + c]])
                    throw validation_error("associativity fails at triple (" + std::to_string(a) +
                                           "," + std::to_string(b) + "," + std::to_string(c) + ")");
    // inverses
    std::vector<unsigned> inv(n, n);
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j)
            if (table[i * n + j] == identity && table[j * n + i] == identity) {
                inv[i] = j;
                break;
            }
        if (inv[i] == n) throw validation_error("missing inverse for element " + std::to_string(i));
    }
    Group g;
    g.n = n;
    g.identity = identity;
    g.names = std::move(names);
    g.table = std::move(table);
    g.inverse_ = std::move(inv);
    return g;
}

struct Subgroup {
    std::vector<unsigned> elems; // sorted element indices of the parent
    size_t order() const { return elems.size(); }
    bool contains(unsigned g) const {
        return std::binary_search(elems.begin(), elems.end(), g);
    }
    bool operator==(const Subgroup& o) const { return elems == o.elems; }
    bool operator<(const Subgroup& o) const {
        if (elems.size() != o.elems.size()) return elems.size() < o.elems.size();
        return elems < o.elems;
    }
};

inline bool is_subgroup(const Group& g, const std::vector<unsigned>& elems) {
    std::set<unsigned> s(elems.begin(), elems.end());
    if (!s.count(g.identity)) return false;
    for (unsigned a : s)
        for (unsigned b : s)
            if (!s.count(g.mul(a, b))) return false;
    for (unsigned a : s)
        if (!s.count(g.inv(a))) return false;
    return true;
}

inline Subgroup make_subgroup(const Group& g, std::vector<unsigned> elems) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    for (unsigned e : elems)
        if (e >= g.n) throw validation_error("subgroup element out of range");
    if (!is_subgroup(g, elems)) throw validation_error("subset is not a subgroup");
    return Subgroup{std::move(elems)};
}

inline Subgroup trivial_subgroup(const Group& g) { return Subgroup{{g.identity}}; }
inline Subgroup full_subgroup(const Group& g) {
    std::vector<unsigned> all(g.n);
    std::iota(all.begin(), all.end(), 0u);
    return Subgroup{std::move(all)};
}

/// Subgroup generated by a subset.
inline std::vector<unsigned> closure(const Group& g, std::vector<unsigned> seed) {
    std::set<unsigned> s(seed.begin(), seed.end());
    s.insert(g.identity);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<unsigned> cur(s.begin(), s.end());
        for (unsigned a : cur)
            for (unsigned b : cur)
                if (s.insert(g.mul(a, b)).second) grew = true;
    }
    return std::vector<unsigned>(s.begin(), s.end());
}

/// Complete list of subgroups, deduplicated, sorted by (order, elements).
inline std::vector<Subgroup> subgroups(const Group& g, unsigned bound = 64) {
    if (g.n > bound)
        throw bound_error("subgroup enumeration bound exceeded: |G| = " + std::to_string(g.n) +
                          " > " + std::to_string(bound));
    std::set<std::vector<unsigned>> all;
    std::vector<std::vector<unsigned>> frontier;
    std::vector<unsigned> triv{g.identity};
    all.insert(triv);
    frontier.push_back(triv);
    while (!frontier.empty()) {
        std::vector<std::vector<unsigned>> next;
        for (const auto& h : frontier) {
            std::set<unsigned> hs(h.begin(), h.end());
            for (unsigned x = 0; x < g.n; ++x) {
                if (hs.count(x)) continue;
                std::vector<unsigned> seed = h;
                seed.push_back(x);
                std::vector<unsigned> k = closure(g, std::move(seed));
                if (all.insert(k).second) next.push_back(std::move(k));
            }
        }
        frontier = std::move(next);
    }
    std::vector<Subgroup> out;
    for (const auto& e : all) out.push_back(Subgroup{e});
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<std::vector<unsigned>> conjugacy_classes(const Group& g) {
    std::vector<bool> seen(g.n, false);
    std::vector<std::vector<unsigned>> classes;
    for (unsigned x = 0; x < g.n; ++x) {
        if (seen[x]) continue;
        std::set<unsigned> cls;
        for (unsigned h = 0; h < g.n; ++h) cls.insert(g.conj(h, x));
        std::vector<unsigned> v(cls.begin(), cls.end());
        for (unsigned y : v) seen[y] = true;
        classes.push_back(std::move(v));
    }
    return classes;
}

inline Subgroup centralizer(const Group& g, unsigned x) {
    if (x >= g.n) throw validation_error("centralizer: element out of range");
    std::vector<unsigned> elems;
    for (unsigned h = 0; h < g.n; ++h)
        if (g.mul(h, x) == g.mul(x, h)) elems.push_back(h);
    return Subgroup{std::move(elems)};
}

inline std::vector<unsigned> centre_elements(const Group& g) {
    std::vector<unsigned> z;
    for (unsigned x = 0; x < g.n; ++x) {
        bool central = true;
        for (unsigned h = 0; h < g.n && central; ++h)
            if (g.mul(h, x) != g.mul(x, h)) central = false;
        if (central) z.push_back(x);
    }
    return z;
}

/// Partition of G into left cosets gH, each sorted, ordered by minimal element.
inline std::vector<std::vector<unsigned>> left_cosets(const Group& g, const Subgroup& h) {
    std::vector<bool> seen(g.n, false);
    std::vector<std::vector<unsigned>> cosets;
    for (unsigned x = 0; x < g.n; ++x) {
        if (seen[x]) continue;
        std::vector<unsigned> coset;
        for (unsigned t : h.elems) coset.push_back(g.mul(x, t));
        std::sort(coset.begin(), coset.end());
        for (unsigned y : coset) seen[y] = true;
        cosets.push_back(std::move(coset));
    }
    return cosets;
}

/// Partition into right cosets Hg.
inline std::vector<std::vector<unsigned>> right_cosets(const Group& g, const Subgroup& h) {
    std::vector<bool> seen(g.n, false);
    std::vector<std::vector<unsigned>> cosets;
    for (unsigned x = 0; x < g.n; ++x) {
        if (seen[x]) continue;
        std::vector<unsigned> coset;
        for (unsigned t : h.elems) coset.push_back(g.mul(t, x));
        std::sort(coset.begin(), coset.end());
        for (unsigned y : coset) seen[y] = true;
        cosets.push_back(std::move(coset));
    }
    return cosets;
}

/// Minimal representative of each left coset, in coset order.
inline std::vector<unsigned> left_transversal(const Group& g, const Subgroup& h) {
    std::vector<unsigned> reps;
    for (const auto& coset : left_cosets(g, h)) reps.push_back(coset.front());
    return reps;
}

inline std::vector<unsigned> right_transversal(const Group& g, const Subgroup& h) {
    std::vector<unsigned> reps;
    for (const auto& coset : right_cosets(g, h)) reps.push_back(coset.front());
    return reps;
}

inline Subgroup conjugate_subgroup(const Group& g, const Subgroup& h, unsigned x) {
    std::vector<unsigned> elems;
    for (unsigned t : h.elems) elems.push_back(g.conj(x, t));
    std::sort(elems.begin(), elems.end());
    return Subgroup{std::move(elems)};
}

inline bool is_normal(const Group& g, const Subgroup& h) {
    for (unsigned x = 0; x < g.n; ++x)
        if (!(conjugate_subgroup(g, h, x) == h)) return false;
    return true;
}

/// A subgroup as a group in its own right, with the index map to the parent.
struct SubgroupGroup {
    Group group;
    std::vector<unsigned> to_parent;          // position -> parent index
    std::map<unsigned, unsigned> from_parent; // parent index -> position
};

inline SubgroupGroup subgroup_group(const Group& g, const Subgroup& h) {
    SubgroupGroup out;
    out.to_parent = h.elems;
    for (unsigned p = 0; p < h.elems.size(); ++p) out.from_parent[h.elems[p]] = p;
    unsigned m = static_cast<unsigned>(h.elems.size());
    std::vector<unsigned> table(static_cast<size_t>(m) * m);
    std::vector<std::string> names;
    for (unsigned e : h.elems) names.push_back(g.names[e]);
    for (unsigned i = 0; i < m; ++i)
        for (unsigned j = 0; j < m; ++j) {
            unsigned prod = g.mul(h.elems[i], h.elems[j]);
            auto it = out.from_parent.find(prod);
            if (it == out.from_parent.end()) throw validation_error("subset not closed under product");
            table[i * m + j] = it->second;
        }
    out.group = validate_group(std::move(table), out.from_parent.at(g.identity), std::move(names));
    return out;
}

/// Greedy deterministic generating set.
inline std::vector<unsigned> generators(const Group& g) {
    std::vector<unsigned> gens;
    std::vector<unsigned> gen_closure{g.identity};
    for (unsigned x = 0; x < g.n && gen_closure.size() < g.n; ++x) {
        if (std::binary_search(gen_closure.begin(), gen_closure.end(), x)) continue;
        gens.push_back(x);
        std::vector<unsigned> seed = gen_closure;
        seed.push_back(x);
        gen_closure = closure(g, std::move(seed));
    }
    if (gens.empty()) gens.push_back(g.identity);
    return gens;
}

// ---------------------------------------------------------------------------
// Catalog

namespace detail {

using Perm = std::vector<unsigned>;

inline Perm pcompose(const Perm& a, const Perm& b) { // (a after b)
    Perm c(a.size());
    for (size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
    return c;
}

inline std::string cycle_name(const Perm& p) {
    std::vector<bool> seen(p.size(), false);
    std::string out;
    for (size_t i = 0; i < p.size(); ++i) {
        if (seen[i] || p[i] == i) continue;
        out += "(";
        size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            out += std::to_string(j + 1);
            j = p[j];
        }
        out += ")";
    }
    return out.empty() ? "e" : out;
}

inline Group group_from_perms(const std::vector<Perm>& elems, std::vector<std::string> names) {
    unsigned n = static_cast<unsigned>(elems.size());
    std::map<Perm, unsigned> index;
    for (unsigned i = 0; i < n; ++i) index[elems[i]] = i;
    std::vector<unsigned> table(static_cast<size_t>(n) * n);
    unsigned identity = n;
    for (unsigned i = 0; i < n; ++i) {
        bool is_id = true;
        for (size_t k = 0; k < elems[i].size(); ++k)
            if (elems[i][k] != k) is_id = false;
        if (is_id) identity = i;
        for (unsigned j = 0; j < n; ++j) {
            auto it = index.find(pcompose(elems[i], elems[j]));
            if (it == index.end()) throw validation_error("permutation set not closed");
            table[i * n + j] = it->second;
        }
    }
    if (identity == n) throw validation_error("identity permutation missing");
    return validate_group(std::move(table), identity, std::move(names));
}

inline std::vector<Perm> perm_closure(const std::vector<Perm>& gens, size_t points) {
    Perm id(points);
    for (size_t i = 0; i < points; ++i) id[i] = static_cast<unsigned>(i);
    std::set<Perm> all{id};
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Perm> cur(all.begin(), all.end());
        for (const Perm& a : cur)
            for (const Perm& g : gens)
                if (all.insert(pcompose(a, g)).second) grew = true;
    }
    return std::vector<Perm>(all.begin(), all.end());
}

inline Group cyclic_group(unsigned n) {
    Perm gen(n);
    for (unsigned i = 0; i < n; ++i) gen[i] = (i + 1) % n;
    std::vector<Perm> elems;
    std::vector<std::string> names;
    Perm cur(n);
    for (unsigned i = 0; i < n; ++i) cur[i] = i;
    for (unsigned k = 0; k < n; ++k) {
        elems.push_back(cur);
        names.push_back(k == 0 ? "e" : (k == 1 ? "a" : "a" + std::to_string(k)));
        cur = pcompose(gen, cur);
    }
    return group_from_perms(elems, names);
}

inline Group elementary_abelian_2(unsigned rank) {
    // generators: disjoint transpositions on 2*rank points
    unsigned n = 1u << rank;
    std::vector<Perm> gens;
    for (unsigned r = 0; r < rank; ++r) {
        Perm p(2 * rank);
        for (unsigned i = 0; i < 2 * rank; ++i) p[i] = i;
        std::swap(p[2 * r], p[2 * r + 1]);
        gens.push_back(p);
    }
    const char* letters = "abc";
    std::vector<Perm> elems;
    std::vector<std::string> names;
    for (unsigned mask = 0; mask < n; ++mask) {
        Perm p(2 * rank);
        for (unsigned i = 0; i < 2 * rank; ++i) p[i] = i;
        std::string name;
        for (unsigned r = 0; r < rank; ++r)
            if (mask & (1u << r)) {
                p = pcompose(gens[r], p);
                name += letters[r];
            }
        if (name.empty()) name = "e";
        elems.push_back(p);
        names.push_back(name);
    }
    return group_from_perms(elems, names);
}

inline Group symmetric_group(unsigned pts, bool even_only) {
    std::vector<unsigned> base(pts);
    for (unsigned i = 0; i < pts; ++i) base[i] = i;
    std::vector<Perm> elems;
    std::vector<std::string> names;
    std::vector<unsigned> p = base;
    do {
        if (even_only) {
            unsigned invs = 0;
            for (size_t i = 0; i < p.size(); ++i)
                for (size_t j = i + 1; j < p.size(); ++j)
                    if (p[i] > p[j]) ++invs;
            if (invs % 2 != 0) continue;
        }
        elems.push_back(p);
        names.push_back(cycle_name(p));
    } while (std::next_permutation(p.begin(), p.end()));
    return group_from_perms(elems, names);
}

inline Group dihedral_4() {
    Perm r{1, 2, 3, 0};   // quarter turn of the square
    Perm s{0, 3, 2, 1};   // reflection fixing vertices 1 and 3
    std::vector<Perm> elems;
    std::vector<std::string> names;
    Perm ri{0, 1, 2, 3};
    for (unsigned i = 0; i < 4; ++i) {
        elems.push_back(ri);
        names.push_back(i == 0 ? "e" : (i == 1 ? "r" : "r" + std::to_string(i)));
        ri = pcompose(r, ri);
    }
    ri = {0, 1, 2, 3};
    for (unsigned i = 0; i < 4; ++i) {
        elems.push_back(pcompose(ri, s));
        names.push_back(i == 0 ? "s" : (i == 1 ? "rs" : "r" + std::to_string(i) + "s"));
        ri = pcompose(r, ri);
    }
    return group_from_perms(elems, names);
}

inline Group quaternion_8() {
    // left regular permutations on {1,-1,i,-i,j,-j,k,-k}
    std::vector<Perm> elems = {
        {0, 1, 2, 3, 4, 5, 6, 7}, // 1
        {1, 0, 3, 2, 5, 4, 7, 6}, // -1
        {2, 3, 1, 0, 6, 7, 5, 4}, // i
        {3, 2, 0, 1, 7, 6, 4, 5}, // -i
        {4, 5, 7, 6, 1, 0, 2, 3}, // j
        {5, 4, 6, 7, 0, 1, 3, 2}, // -j
        {6, 7, 4, 5, 3, 2, 1, 0}, // k
        {7, 6, 5, 4, 2, 3, 0, 1}, // -k
    };
    std::vector<std::string> names = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
    return group_from_perms(elems, names);
}

} // namespace detail

inline const std::vector<std::string>& catalog_names() {
    static const std::vector<std::string> names = {"C2", "C3", "C4", "C2xC2",      "S3",
                                                   "D4", "Q8", "A4", "C2xC2xC2", "S4"};
    return names;
}

/// Catalog group by name; all are validated at construction.
inline const Group& catalog_group(const std::string& name) {
    static std::mutex mtx;
    static std::map<std::string, Group> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(name);
    if (it != cache.end()) return it->second;
    Group g;
    if (name == "C2") g = detail::cyclic_group(2);
    else if (name == "C3") g = detail::cyclic_group(3);
    else if (name == "C4") g = detail::cyclic_group(4);
    else if (name == "C5") g = detail::cyclic_group(5);
    else if (name == "C6") g = detail::cyclic_group(6);
    else if (name == "C2xC2") g = detail::elementary_abelian_2(2);
    else if (name == "C2xC2xC2") g = detail::elementary_abelian_2(3);
    else if (name == "S3") g = detail::symmetric_group(3, false);
    else if (name == "A4") g = detail::symmetric_group(4, true);
    else if (name == "S4") g = detail::symmetric_group(4, false);
    else if (name == "D4") g = detail::dihedral_4();
    else if (name == "Q8") g = detail::quaternion_8();
    else throw validation_error("unknown catalog group '" + name + "'");
    auto [pos, ok] = cache.emplace(name, std::move(g));
    return pos->second;
}

} // namespace centra
