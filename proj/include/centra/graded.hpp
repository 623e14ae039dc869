#pragma once

// Objects and algebras of C(G): graded spaces, structure-constant algebras
// with axiom checkers, skew group algebras, matrix amplification and the
// trace-form separability test.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "centra/cohomology.hpp"
#include "centra/error.hpp"
#include "centra/field.hpp"
#include "centra/group.hpp"
#include "centra/matrix.hpp"
#include "centra/report.hpp"

namespace centra {

struct GradedSpace {
    Group group;
    std::vector<std::string> labels;
    std::vector<unsigned> degree; // basis index -> group element

    size_t dim() const { return degree.size(); }
};

inline GradedSpace make_graded_space(const Group& g, std::vector<std::string> labels,
                                     std::vector<unsigned> degree) {
    if (labels.size() != degree.size()) throw validation_error("graded space: labels/degrees mismatch");
    for (unsigned d : degree)
        if (d >= g.n) throw validation_error("graded space: degree out of range");
    return GradedSpace{g, std::move(labels), std::move(degree)};
}

/// Sparse structure constants: b_i * b_j = sum_k T[i][j][k] b_k.
struct MulTable {
    size_t dim = 0;
    std::vector<std::vector<std::pair<size_t, Scalar>>> entry; // [i*dim+j] -> {(k, coeff)}

    static MulTable zero(size_t d) {
        MulTable t;
        t.dim = d;
        t.entry.assign(d * d, {});
        return t;
    }
    void set(size_t i, size_t j, size_t k, const Scalar& c) {
        if (c.is_zero()) return;
        entry[i * dim + j].push_back({k, c});
    }
    const std::vector<std::pair<size_t, Scalar>>& at(size_t i, size_t j) const {
        return entry[i * dim + j];
    }
    /// Coordinates of (x * y).
    Vec mul(const Vec& x, const Vec& y, FieldSpec field) const {
        Vec out(dim, Scalar::zero(field));
        for (size_t i = 0; i < dim; ++i) {
            if (x[i].is_zero()) continue;
            for (size_t j = 0; j < dim; ++j) {
                if (y[j].is_zero()) continue;
                Scalar c = x[i] * y[j];
                for (const auto& [k, t] : at(i, j)) out[k] += c * t;
            }
        }
        return out;
    }
    /// Matrix of left multiplication by x.
    Mat left_mult(const Vec& x, FieldSpec field) const {
        Mat m(field, dim, dim);
        for (size_t i = 0; i < dim; ++i) {
            if (x[i].is_zero()) continue;
            for (size_t j = 0; j < dim; ++j)
                for (const auto& [k, t] : at(i, j)) m.at(k, j) += x[i] * t;
        }
        return m;
    }
    /// Matrix of right multiplication by y.
    Mat right_mult(const Vec& y, FieldSpec field) const {
        Mat m(field, dim, dim);
        for (size_t j = 0; j < dim; ++j) {
            if (y[j].is_zero()) continue;
            for (size_t i = 0; i < dim; ++i)
                for (const auto& [k, t] : at(i, j)) m.at(k, i) += y[j] * t;
        }
        return m;
    }
};

struct GradedAlgebra {
    FieldSpec field;
    GradedSpace space;
    MulTable mul;
    Vec unit;

    size_t dim() const { return space.dim(); }
    const Group& group() const { return space.group; }
    Vec basis_vec(size_t i) const {
        Vec v(dim(), Scalar::zero(field));
        v[i] = Scalar::one(field);
        return v;
    }
};

/// Associativity on all basis triples, two-sided unit, degree additivity.
inline Report check_graded_algebra(const GradedAlgebra& a) {
    Report rep{"graded_algebra", {}};
    const size_t d = a.dim();
    const Group& g = a.group();
    bool deg_ok = true;
    std::string deg_witness;
    for (size_t i = 0; i < d && deg_ok; ++i)
        for (size_t j = 0; j < d && deg_ok; ++j)
            for (const auto& [k, c] : a.mul.at(i, j))
                if (g.mul(a.space.degree[i], a.space.degree[j]) != a.space.degree[k]) {
                    deg_ok = false;
                    deg_witness = "T[" + std::to_string(i) + "][" + std::to_string(j) + "][" +
                                  std::to_string(k) + "] nonzero violates degree additivity";
                    break;
                }
    rep.add("degree_additive", deg_ok, deg_witness);
    bool assoc_ok = true;
    std::string assoc_witness;
    for (size_t i = 0; i < d && assoc_ok; ++i) {
        Vec bi = a.basis_vec(i);
        for (size_t j = 0; j < d && assoc_ok; ++j) {
            Vec bij = a.mul.mul(bi, a.basis_vec(j), a.field);
            for (size_t k = 0; k < d; ++k) {
                Vec lhs = a.mul.mul(bij, a.basis_vec(k), a.field);
                Vec rhs = a.mul.mul(bi, a.mul.mul(a.basis_vec(j), a.basis_vec(k), a.field), a.field);
                if (lhs != rhs) {
                    assoc_ok = false;
                    assoc_witness = "associativity fails at triple (" + std::to_string(i) + "," +
                                    std::to_string(j) + "," + std::to_string(k) + ")";
                    break;
                }
            }
        }
    }
    rep.add("associative", assoc_ok, assoc_witness);
    bool unit_ok = a.unit.size() == d;
    std::string unit_witness = unit_ok ? "" : "unit length mismatch";
    // unit must be concentrated in degree e
    if (unit_ok)
        for (size_t i = 0; i < d; ++i)
            if (!a.unit[i].is_zero() && a.space.degree[i] != g.identity) {
                unit_ok = false;
                unit_witness = "unit has a component of nontrivial degree";
                break;
            }
    if (unit_ok)
        for (size_t i = 0; i < d; ++i) {
            Vec bi = a.basis_vec(i);
            if (a.mul.mul(a.unit, bi, a.field) != bi || a.mul.mul(bi, a.unit, a.field) != bi) {
                unit_ok = false;
                unit_witness = "unit axiom fails at basis " + std::to_string(i);
                break;
            }
        }
    rep.add("unit", unit_ok, unit_witness);
    return rep;
}

/// k[H, gamma] inside C(G): basis e_h for h in H, e_f e_g = gamma(f,g) e_{fg}.
inline GradedAlgebra skew_group_algebra(const Group& g, const Subgroup& h, const Cocycle2& gamma,
                                        FieldSpec field) {
    SubgroupGroup sg = subgroup_group(g, h);
    if (!gamma.group.same_table(sg.group))
        throw validation_error("skew_group_algebra: cocycle group does not match the subgroup");
    if (field.m() % gamma.modulus != 0)
        throw field_error("skew_group_algebra: field lacks the needed roots of unity");
    const size_t d = h.elems.size();
    GradedAlgebra a;
    a.field = field;
    std::vector<std::string> labels;
    std::vector<unsigned> degree;
    for (unsigned e : h.elems) {
        labels.push_back("e_" + g.names[e]);
        degree.push_back(e);
    }
    a.space = make_graded_space(g, std::move(labels), std::move(degree));
    a.mul = MulTable::zero(d);
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) {
            unsigned prod = sg.group.mul(static_cast<unsigned>(i), static_cast<unsigned>(j));
            a.mul.set(i, j, prod, gamma.value(field, static_cast<unsigned>(i), static_cast<unsigned>(j)));
        }
    a.unit.assign(d, Scalar::zero(field));
    a.unit[sg.from_parent.at(g.identity)] = Scalar::one(field);
    Report rep = check_graded_algebra(a);
    if (!rep.pass()) throw validation_error("skew_group_algebra: " + rep.summary());
    return a;
}

inline GradedAlgebra unit_algebra(const Group& g, FieldSpec field) {
    return skew_group_algebra(g, trivial_subgroup(g), zero_cocycle(subgroup_group(g, trivial_subgroup(g)).group, 1), field);
}

inline GradedAlgebra group_algebra(const Group& g, FieldSpec field) {
    Subgroup full = full_subgroup(g);
    return skew_group_algebra(g, full, zero_cocycle(g, 1), field);
}

/// End(W) tensor A with basis E_{ij} (x) b_k, degree |w_i| |b_k| |w_j|^-1.
inline GradedAlgebra matrix_amplification(const GradedAlgebra& a, const GradedSpace& w) {
    if (w.dim() == 0) throw validation_error("matrix_amplification: W is zero");
    if (!w.group.same_table(a.group()))
        throw validation_error("matrix_amplification: group mismatch");
    const Group& g = a.group();
    const size_t n = w.dim(), d = a.dim();
    GradedAlgebra out;
    out.field = a.field;
    std::vector<std::string> labels;
    std::vector<unsigned> degree;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t k = 0; k < d; ++k) {
                labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1) + "*" +
                                 a.space.labels[k]);
                degree.push_back(g.mul(g.mul(w.degree[i], a.space.degree[k]), g.inv(w.degree[j])));
            }
    out.space = make_graded_space(g, std::move(labels), std::move(degree));
    const size_t D = n * n * d;
    out.mul = MulTable::zero(D);
    auto idx = [&](size_t i, size_t j, size_t k) { return (i * n + j) * d + k; };
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            for (size_t l = 0; l < n; ++l)
                for (size_t p = 0; p < d; ++p)
                    for (size_t q = 0; q < d; ++q)
                        for (const auto& [k, c] : a.mul.at(p, q))
                            out.mul.set(idx(i, j, p), idx(j, l, q), idx(i, l, k), c);
    out.unit.assign(D, Scalar::zero(a.field));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < d; ++k)
            if (!a.unit[k].is_zero()) out.unit[idx(i, i, k)] = a.unit[k];
    return out;
}

struct SeparabilityResult {
    bool nondegenerate = false;
    Mat gram;             // e(b_i, b_j) = tr(L_{b_i b_j})
    std::optional<Vec> radical_witness;
};

/// Nondegeneracy of the left-multiplication trace form.
inline SeparabilityResult separability_check(const GradedAlgebra& a) {
    SeparabilityResult res;
    const size_t d = a.dim();
    std::vector<Mat> left;
    for (size_t i = 0; i < d; ++i) left.push_back(a.mul.left_mult(a.basis_vec(i), a.field));
    res.gram = Mat(a.field, d, d);
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) res.gram.at(i, j) = trace(left[i] * left[j]);
    auto ns = nullspace(res.gram);
    res.nondegenerate = ns.empty();
    if (!ns.empty()) res.radical_witness = ns.front();
    return res;
}

/// f(ab) = f(a)f(b) on basis pairs, f(1) = 1, degree preservation.
inline Report check_graded_hom(const Mat& f, const GradedAlgebra& a, const GradedAlgebra& b) {
    Report rep{"graded_hom", {}};
    if (f.rows() != b.dim() || f.cols() != a.dim()) {
        rep.add("shape", false, "map shape mismatch");
        return rep;
    }
    bool deg_ok = true;
    std::string deg_w;
    for (size_t j = 0; j < a.dim() && deg_ok; ++j)
        for (size_t i = 0; i < b.dim(); ++i)
            if (!f.at(i, j).is_zero() && b.space.degree[i] != a.space.degree[j]) {
                deg_ok = false;
                deg_w = "entry (" + std::to_string(i) + "," + std::to_string(j) + ") crosses degrees";
                break;
            }
    rep.add("degree_preserving", deg_ok, deg_w);
    bool unit_ok = f * a.unit == b.unit;
    rep.add("unit", unit_ok, unit_ok ? "" : "f(1) != 1");
    bool mult_ok = true;
    std::string mult_w;
    for (size_t i = 0; i < a.dim() && mult_ok; ++i)
        for (size_t j = 0; j < a.dim(); ++j) {
            Vec lhs = f * a.mul.mul(a.basis_vec(i), a.basis_vec(j), a.field);
            Vec rhs = b.mul.mul(f * a.basis_vec(i), f * a.basis_vec(j), b.field);
            if (lhs != rhs) {
                mult_ok = false;
                mult_w = "f(ab) != f(a)f(b) at pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
                break;
            }
        }
    rep.add("multiplicative", mult_ok, mult_w);
    return rep;
}

} // namespace centra
