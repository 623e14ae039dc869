#pragma once

// Algebras in Rep(G): G-algebras, projective representations with their
// Schur multiplier, induced algebras, and A(H,gamma) = ind_H^G(End(V)).

#include <string>
#include <vector>

#include "centra/centre.hpp"
#include "centra/cohomology.hpp"
#include "centra/error.hpp"
#include "centra/graded.hpp"
#include "centra/group.hpp"
#include "centra/matrix.hpp"
#include "centra/report.hpp"

namespace centra {

struct GAlgebra {
    FieldSpec field;
    Group group;
    std::vector<std::string> labels;
    MulTable mul;
    Vec unit;
    std::vector<Mat> action; // algebra automorphisms, one per group element

    size_t dim() const { return labels.size(); }
    Vec basis_vec(size_t i) const {
        Vec v(dim(), Scalar::zero(field));
        v[i] = Scalar::one(field);
        return v;
    }
    const Mat& rho(unsigned g) const { return action[g]; }
};

inline Report check_g_algebra(const GAlgebra& a) {
    Report rep{"g_algebra", {}};
    const size_t d = a.dim();
    const Group& g = a.group;
    bool assoc = true;
    std::string assoc_w;
    for (size_t i = 0; i < d && assoc; ++i)
        for (size_t j = 0; j < d && assoc; ++j) {
            Vec bij = a.mul.mul(a.basis_vec(i), a.basis_vec(j), a.field);
            for (size_t k = 0; k < d; ++k) {
                Vec lhs = a.mul.mul(bij, a.basis_vec(k), a.field);
                Vec rhs = a.mul.mul(a.basis_vec(i), a.mul.mul(a.basis_vec(j), a.basis_vec(k), a.field), a.field);
                if (lhs != rhs) {
                    assoc = false;
                    assoc_w = "associativity fails at (" + std::to_string(i) + "," + std::to_string(j) +
                              "," + std::to_string(k) + ")";
                    break;
                }
            }
        }
    rep.add("associative", assoc, assoc_w);
    bool unit_ok = true;
    for (size_t i = 0; i < d && unit_ok; ++i) {
        Vec bi = a.basis_vec(i);
        if (a.mul.mul(a.unit, bi, a.field) != bi || a.mul.mul(bi, a.unit, a.field) != bi) unit_ok = false;
    }
    rep.add("unit", unit_ok);
    rep.add("identity_acts_trivially", a.rho(g.identity) == Mat::identity(a.field, d));
    bool homo = true;
    for (unsigned x = 0; x < g.n && homo; ++x)
        for (unsigned y = 0; y < g.n && homo; ++y)
            if (a.rho(x) * a.rho(y) != a.rho(g.mul(x, y))) homo = false;
    rep.add("action_is_homomorphism", homo);
    bool automorphic = true;
    std::string aut_w;
    for (unsigned x = 0; x < g.n && automorphic; ++x) {
        if (!(a.rho(x) * a.unit == a.unit)) {
            automorphic = false;
            aut_w = "action of " + g.names[x] + " moves the unit";
            break;
        }
        for (size_t i = 0; i < d && automorphic; ++i)
            for (size_t j = 0; j < d; ++j) {
                Vec lhs = a.rho(x) * a.mul.mul(a.basis_vec(i), a.basis_vec(j), a.field);
                Vec rhs = a.mul.mul(a.rho(x) * a.basis_vec(i), a.rho(x) * a.basis_vec(j), a.field);
                if (lhs != rhs) {
                    automorphic = false;
                    aut_w = "action of " + g.names[x] + " not multiplicative at (" +
                            std::to_string(i) + "," + std::to_string(j) + ")";
                    break;
                }
            }
    }
    rep.add("action_by_algebra_automorphisms", automorphic, aut_w);
    return rep;
}

/// k with the trivial action.
inline GAlgebra trivial_g_algebra(const Group& g, FieldSpec field) {
    GAlgebra a;
    a.field = field;
    a.group = g;
    a.labels = {"1"};
    a.mul = MulTable::zero(1);
    a.mul.set(0, 0, 0, Scalar::one(field));
    a.unit = {Scalar::one(field)};
    a.action.assign(g.n, Mat::identity(field, 1));
    return a;
}

/// k[G] with the conjugation action.
inline GAlgebra conjugation_group_algebra(const Group& g, FieldSpec field) {
    GAlgebra a;
    a.field = field;
    a.group = g;
    for (unsigned x = 0; x < g.n; ++x) a.labels.push_back("e_" + g.names[x]);
    a.mul = MulTable::zero(g.n);
    for (unsigned x = 0; x < g.n; ++x)
        for (unsigned y = 0; y < g.n; ++y) a.mul.set(x, y, g.mul(x, y), Scalar::one(field));
    a.unit.assign(g.n, Scalar::zero(field));
    a.unit[g.identity] = Scalar::one(field);
    for (unsigned f = 0; f < g.n; ++f) {
        Mat m(field, g.n, g.n);
        for (unsigned x = 0; x < g.n; ++x) m.at(g.conj(f, x), x) = Scalar::one(field);
        a.action.push_back(std::move(m));
    }
    return a;
}

struct ProjectiveRep {
    Group group;     // H (own table)
    Cocycle2 gamma;  // Schur multiplier, on the same table
    FieldSpec field;
    std::vector<Mat> mats;

    size_t dim() const { return mats.empty() ? 0 : mats[0].rows(); }
};

struct ProjRepCheck {
    bool valid = false;
    bool irreducible = false;
    size_t commutant_dim = 0;
    std::string witness;
};

/// r(e) = id and r(f) r(g) = gamma(f,g) r(fg); irreducibility by the
/// commutant: nullspace of [r(h), X] = 0 must be the scalars.
inline ProjRepCheck check_projective_rep(const ProjectiveRep& r) {
    ProjRepCheck out;
    const Group& h = r.group;
    const size_t d = r.dim();
    if (r.mats.size() != h.n || d == 0) {
        out.witness = "matrix list size mismatch";
        return out;
    }
    if (r.mats[h.identity] != Mat::identity(r.field, d)) {
        out.witness = "r(e) != id";
        return out;
    }
    for (unsigned f = 0; f < h.n; ++f)
        for (unsigned g = 0; g < h.n; ++g) {
            Mat lhs = r.mats[f] * r.mats[g];
            Mat rhs = r.mats[h.mul(f, g)];
            Scalar c = r.gamma.value(r.field, f, g);
            for (size_t i = 0; i < d; ++i)
                for (size_t j = 0; j < d; ++j)
                    if (lhs.at(i, j) != c * rhs.at(i, j)) {
                        out.witness = "relation fails at pair (" + h.names[f] + "," + h.names[g] + ")";
                        return out;
                    }
        }
    out.valid = true;
    // commutant
    std::vector<Vec> rows;
    for (unsigned x = 0; x < h.n; ++x) {
        const Mat& m = r.mats[x];
        for (size_t i = 0; i < d; ++i)
            for (size_t j = 0; j < d; ++j) {
                Vec row(d * d, Scalar::zero(r.field));
                bool nz = false;
                for (size_t k = 0; k < d; ++k) {
                    // (m X - X m)_{ij} : coefficient of X_{kj} is m_{ik}, of X_{ik} is -m_{kj}
                    Scalar c1 = m.at(i, k);
                    if (!c1.is_zero()) {
                        row[k * d + j] += c1;
                        nz = true;
                    }
                    Scalar c2 = m.at(k, j);
                    if (!c2.is_zero()) {
                        row[i * d + k] -= c2;
                        nz = true;
                    }
                }
                if (nz) rows.push_back(std::move(row));
            }
    }
    size_t dim_comm =
        rows.empty() ? d * d : nullspace(Mat::from_rows(r.field, d * d, rows)).size();
    out.commutant_dim = dim_comm;
    out.irreducible = dim_comm == 1;
    return out;
}

/// End(V) as an H-algebra, H acting by conjugation through r. The gamma
/// factors cancel, leaving a genuine action.
inline GAlgebra end_algebra_of_rep(const ProjectiveRep& r) {
    const size_t d = r.dim();
    const Group& h = r.group;
    GAlgebra a;
    a.field = r.field;
    a.group = h;
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j)
            a.labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
    a.mul = MulTable::zero(d * d);
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j)
            for (size_t l = 0; l < d; ++l)
                a.mul.set(i * d + j, j * d + l, i * d + l, Scalar::one(r.field));
    a.unit.assign(d * d, Scalar::zero(r.field));
    for (size_t i = 0; i < d; ++i) a.unit[i * d + i] = Scalar::one(r.field);
    for (unsigned x = 0; x < h.n; ++x) {
        auto rinv = inverse(r.mats[x]);
        if (!rinv) throw validation_error("projective rep matrix not invertible");
        a.action.push_back(kron(r.mats[x], rinv->transpose()));
    }
    Report rep = check_g_algebra(a);
    if (!rep.pass()) throw validation_error("end_algebra_of_rep: " + rep.summary());
    return a;
}

/// ind_H^G(E) = {a : G -> E | a(hg) = h(a(g))}, pointwise product,
/// G acting by right translation of the argument. Basis (right coset Ht, e_i).
struct InducedAlgebra {
    GAlgebra algebra;
    std::vector<unsigned> transversal; // right-coset representatives in G
};

inline InducedAlgebra induced_algebra(const Group& g, const Subgroup& h, const GAlgebra& e) {
    SubgroupGroup hg = subgroup_group(g, h);
    if (!e.group.same_table(hg.group))
        throw validation_error("induced_algebra: E is not an algebra over the subgroup");
    InducedAlgebra out;
    out.transversal = right_transversal(g, h);
    const size_t nc = out.transversal.size(), de = e.dim();
    auto coset_of = [&](unsigned x) -> size_t {
        for (size_t c = 0; c < nc; ++c)
            if (h.contains(g.mul(x, g.inv(out.transversal[c])))) return c;
        throw validation_error("induced_algebra: coset lookup failure");
    };
    GAlgebra a;
    a.field = e.field;
    a.group = g;
    for (size_t c = 0; c < nc; ++c)
        for (size_t i = 0; i < de; ++i)
            a.labels.push_back("t" + g.names[out.transversal[c]] + ":" + e.labels[i]);
    const size_t D = nc * de;
    auto idx = [&](size_t c, size_t i) { return c * de + i; };
    a.mul = MulTable::zero(D);
    for (size_t c = 0; c < nc; ++c)
        for (size_t i = 0; i < de; ++i)
            for (size_t j = 0; j < de; ++j)
                for (const auto& [k, coef] : e.mul.at(i, j)) a.mul.set(idx(c, i), idx(c, j), idx(c, k), coef);
    a.unit.assign(D, Scalar::zero(e.field));
    for (size_t c = 0; c < nc; ++c)
        for (size_t i = 0; i < de; ++i) a.unit[idx(c, i)] = e.unit[i];
    for (unsigned f = 0; f < g.n; ++f) {
        Mat m(e.field, D, D);
        for (size_t c = 0; c < nc; ++c) {
            unsigned t = out.transversal[c];
            // new coset H t f^-1, with h0 = t' f t^-1 in H
            unsigned tf = g.mul(t, g.inv(f));
            size_t c2 = coset_of(tf);
            unsigned t2 = out.transversal[c2];
            unsigned h0 = g.mul(g.mul(t2, f), g.inv(t));
            const Mat& re = e.rho(hg.from_parent.at(h0));
            for (size_t i = 0; i < de; ++i)
                for (size_t i2 = 0; i2 < de; ++i2) {
                    const Scalar& cc = re.at(i2, i);
                    if (!cc.is_zero()) m.at(idx(c2, i2), idx(c, i)) = cc;
                }
        }
        a.action.push_back(std::move(m));
    }
    Report rep = check_g_algebra(a);
    if (!rep.pass()) throw validation_error("induced_algebra: " + rep.summary());
    out.algebra = std::move(a);
    return out;
}

/// A(H, gamma) = ind_H^G(End(V)) for an irreducible projective rep of H.
inline InducedAlgebra make_A_H_gamma(const Group& g, const Subgroup& h, const ProjectiveRep& r) {
    ProjRepCheck chk = check_projective_rep(r);
    if (!chk.valid) throw validation_error("make_A_H_gamma: invalid projective rep: " + chk.witness);
    if (!chk.irreducible)
        throw validation_error("make_A_H_gamma: rep is reducible (commutant dim " +
                               std::to_string(chk.commutant_dim) + ")");
    SubgroupGroup hg = subgroup_group(g, h);
    if (!r.group.same_table(hg.group))
        throw validation_error("make_A_H_gamma: rep not on the subgroup");
    return induced_algebra(g, h, end_algebra_of_rep(r));
}

/// Trivial 1-dimensional rep with gamma = 0 (modulus 1).
inline ProjectiveRep trivial_rep(const Group& h, FieldSpec field) {
    ProjectiveRep r;
    r.group = h;
    r.gamma = zero_cocycle(h, 1);
    r.field = field;
    r.mats.assign(h.n, Mat::identity(field, 1));
    return r;
}

/// The 2-dimensional projective rep of a Klein four group: the two chosen
/// generators act by the anticommuting involutions X and Z. The Schur
/// multiplier is read off the matrices, so it is correct by construction.
inline ProjectiveRep pauli_rep(const Group& h, FieldSpec field) {
    if (h.n != 4) throw validation_error("pauli_rep: group must have order 4");
    for (unsigned x = 0; x < h.n; ++x)
        if (x != h.identity && h.mul(x, x) != h.identity)
            throw validation_error("pauli_rep: group is not C2xC2");
    std::vector<unsigned> nt;
    for (unsigned x = 0; x < h.n; ++x)
        if (x != h.identity) nt.push_back(x);
    unsigned a = nt[0], b = nt[1];
    Mat X(field, 2, 2), Z(field, 2, 2);
    X.at(0, 1) = Scalar::one(field);
    X.at(1, 0) = Scalar::one(field);
    Z.at(0, 0) = Scalar::one(field);
    Z.at(1, 1) = -Scalar::one(field);
    ProjectiveRep r;
    r.group = h;
    r.field = field;
    r.mats.assign(h.n, Mat::identity(field, 2));
    r.mats[a] = X;
    r.mats[b] = Z;
    r.mats[h.mul(a, b)] = X * Z;
    // read the multiplier off the matrices
    std::vector<int> table(16, 0);
    for (unsigned f = 0; f < 4; ++f)
        for (unsigned g2 = 0; g2 < 4; ++g2) {
            Mat prod = r.mats[f] * r.mats[g2];
            const Mat& tgt = r.mats[h.mul(f, g2)];
            // prod = c * tgt for a scalar c
            Scalar c = Scalar::zero(field);
            for (size_t i = 0; i < 2 && c.is_zero(); ++i)
                for (size_t j = 0; j < 2; ++j)
                    if (!tgt.at(i, j).is_zero()) {
                        c = prod.at(i, j) / tgt.at(i, j);
                        break;
                    }
            auto exp = as_root_of_unity(c, 2);
            if (!exp) throw validation_error("pauli_rep: multiplier not in mu_2");
            table[f * 4 + g2] = static_cast<int>(*exp);
        }
    r.gamma = check_cocycle(h, 2, std::move(table), false);
    ProjRepCheck chk = check_projective_rep(r);
    if (!chk.valid || !chk.irreducible) throw validation_error("pauli_rep: construction invalid");
    return r;
}

} // namespace centra
