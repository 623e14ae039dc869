#pragma once

// Seeded deterministic generators for property suites: centre objects are
// direct sums of conjugacy-class blocks with character twists, which pass
// the compatibility invariant by construction.

#include <cstdint>
#include <random>
#include <vector>

#include "centra/centre.hpp"
#include "centra/group.hpp"

namespace centra {

class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}
    std::uint64_t next(std::uint64_t bound) { // uniform in [0, bound)
        std::uniform_int_distribution<std::uint64_t> d(0, bound - 1);
        return d(eng_);
    }
    long pick_int(long lo, long hi) { // inclusive
        std::uniform_int_distribution<long> d(lo, hi);
        return d(eng_);
    }

private:
    std::mt19937_64 eng_;
};

/// All homomorphisms G -> Z/m (exponents of mu_m characters).
inline std::vector<std::vector<int>> characters(const Group& g, unsigned m) {
    std::vector<unsigned> gens = generators(g);
    std::vector<std::vector<int>> out;
    std::vector<unsigned> val(gens.size(), 0);
    while (true) {
        // try to extend the generator assignment to a homomorphism by BFS
        std::vector<int> chi(g.n, -1);
        chi[g.identity] = 0;
        bool ok = true;
        bool grew = true;
        while (grew && ok) {
            grew = false;
            for (unsigned x = 0; x < g.n && ok; ++x) {
                if (chi[x] < 0) continue;
                for (size_t k = 0; k < gens.size(); ++k) {
                    unsigned y = g.mul(x, gens[k]);
                    int v = static_cast<int>((chi[x] + val[k]) % m);
                    if (chi[y] < 0) {
                        chi[y] = v;
                        grew = true;
                    } else if (chi[y] != v) {
                        ok = false;
                        break;
                    }
                }
            }
        }
        if (ok) {
            for (unsigned x = 0; x < g.n && ok; ++x)
                for (unsigned y = 0; y < g.n; ++y)
                    if (chi[g.mul(x, y)] != static_cast<int>((chi[x] + chi[y]) % m)) {
                        ok = false;
                        break;
                    }
        }
        if (ok) out.push_back(chi);
        size_t k = gens.size();
        while (k > 0) {
            --k;
            if (++val[k] < m) break;
            val[k] = 0;
            if (k == 0) return out;
        }
        if (gens.empty()) return out;
    }
}

/// Conjugacy-class block: basis {x in class of t}, degree x, action
/// h(b_x) = chi(h) b_{h x h^-1}.
inline CentreObject class_object(const Group& g, FieldSpec field, unsigned t,
                                 const std::vector<int>& chi, unsigned chi_modulus) {
    std::vector<unsigned> cls;
    {
        std::set<unsigned> s;
        for (unsigned h = 0; h < g.n; ++h) s.insert(g.conj(h, t));
        cls.assign(s.begin(), s.end());
    }
    CentreObject x;
    x.field = field;
    std::vector<std::string> labels;
    std::vector<unsigned> degree;
    for (unsigned e : cls) {
        labels.push_back("c_" + g.names[e]);
        degree.push_back(e);
    }
    x.space = make_graded_space(g, std::move(labels), std::move(degree));
    auto pos = [&](unsigned e) {
        return static_cast<size_t>(std::lower_bound(cls.begin(), cls.end(), e) - cls.begin());
    };
    for (unsigned h = 0; h < g.n; ++h) {
        Mat m(field, cls.size(), cls.size());
        Scalar c = root_of_unity(field, chi_modulus, chi[h]);
        for (size_t j = 0; j < cls.size(); ++j) m.at(pos(g.conj(h, cls[j])), j) = c;
        x.action.push_back(std::move(m));
    }
    return x;
}

/// Random centre object: direct sum of 1..max_blocks class blocks with
/// random character twists. Dimension is trimmed by block choice only.
inline CentreObject random_centre_object(const Group& g, FieldSpec field, Rng& rng,
                                         size_t max_dim = 6) {
    unsigned m = field.m();
    std::vector<std::vector<int>> chis = characters(g, m);
    CentreObject acc;
    bool have = false;
    size_t dim = 0;
    size_t guard = 0;
    while (guard++ < 16) {
        unsigned t = static_cast<unsigned>(rng.next(g.n));
        const std::vector<int>& chi = chis[rng.next(chis.size())];
        CentreObject blk = class_object(g, field, t, chi, m);
        if (have && dim + blk.dim() > max_dim) break;
        if (!have) {
            acc = blk;
            have = true;
        } else {
            acc = direct_sum(acc, blk);
        }
        dim = acc.dim();
        if (dim >= max_dim || rng.next(2) == 0) break;
    }
    return acc;
}

/// Random plain graded space.
inline GradedSpace random_graded_space(const Group& g, Rng& rng, size_t max_dim = 4) {
    size_t d = 1 + rng.next(max_dim);
    std::vector<std::string> labels;
    std::vector<unsigned> degree;
    for (size_t i = 0; i < d; ++i) {
        labels.push_back("u" + std::to_string(i));
        degree.push_back(static_cast<unsigned>(rng.next(g.n)));
    }
    return make_graded_space(g, std::move(labels), std::move(degree));
}

/// Random plain representation: permutation action on cosets G/H for a
/// random subgroup, optionally twisted by a character.
inline RepObject random_rep_object(const Group& g, FieldSpec field, Rng& rng, size_t max_dim = 4) {
    std::vector<Subgroup> subs = subgroups(g);
    // prefer subgroups with small coset count
    std::vector<size_t> viable;
    for (size_t i = 0; i < subs.size(); ++i)
        if (g.n / subs[i].order() <= max_dim) viable.push_back(i);
    const Subgroup& h = subs[viable[rng.next(viable.size())]];
    auto cosets = left_cosets(g, h);
    std::vector<std::vector<int>> chis = characters(g, field.m());
    const std::vector<int>& chi = chis[rng.next(chis.size())];
    RepObject v;
    v.field = field;
    v.group = g;
    for (size_t c = 0; c < cosets.size(); ++c) v.labels.push_back("w" + std::to_string(c));
    auto coset_index = [&](unsigned x) -> size_t {
        for (size_t c = 0; c < cosets.size(); ++c)
            if (std::binary_search(cosets[c].begin(), cosets[c].end(), x)) return c;
        return 0;
    };
    for (unsigned f = 0; f < g.n; ++f) {
        Mat m(field, cosets.size(), cosets.size());
        Scalar s = root_of_unity(field, field.m(), chi[f]);
        for (size_t c = 0; c < cosets.size(); ++c)
            m.at(coset_index(g.mul(f, cosets[c].front())), c) = s;
        v.action.push_back(std::move(m));
    }
    return v;
}

/// Random morphism in Z(G): small integer combination of a hom-space basis.
inline Mat random_morphism(const CentreObject& x, const CentreObject& y, Rng& rng) {
    std::vector<Mat> basis = hom_space(x, y);
    Mat m(x.field, y.dim(), x.dim());
    for (const Mat& b : basis) {
        long c = rng.pick_int(-2, 2);
        if (c == 0) continue;
        Scalar s = Scalar::of(x.field, c);
        for (size_t i = 0; i < m.rows(); ++i)
            for (size_t j = 0; j < m.cols(); ++j) m.at(i, j) += s * b.at(i, j);
    }
    return m;
}

} // namespace centra
