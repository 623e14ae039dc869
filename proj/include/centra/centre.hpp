#pragma once

// The category Z(G): G-graded spaces with a compatible G-action.
// Two coexisting realizations drive the braidings: half-braidings against
// graded spaces (graded realization of the ambient category) and against
// representations (rep realization). Every theorem-level computation is
// run under the convention matching its input's realization.

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "centra/cohomology.hpp"
#include "centra/error.hpp"
#include "centra/graded.hpp"
#include "centra/group.hpp"
#include "centra/matrix.hpp"
#include "centra/report.hpp"

namespace centra {

enum class Convention { graded, rep };

inline std::string convention_name(Convention c) {
    return c == Convention::graded ? "graded" : "rep";
}

struct CentreObject {
    FieldSpec field;
    GradedSpace space;
    std::vector<Mat> action; // one per group element

    size_t dim() const { return space.dim(); }
    const Group& group() const { return space.group; }
    const Mat& rho(unsigned g) const { return action[g]; }
};

struct RepObject {
    FieldSpec field;
    Group group;
    std::vector<std::string> labels;
    std::vector<Mat> action;

    size_t dim() const { return labels.size(); }
    const Mat& rho(unsigned g) const { return action[g]; }
};

inline Report check_centre_object(const CentreObject& x) {
    Report rep{"centre_object", {}};
    const Group& g = x.group();
    const size_t d = x.dim();
    bool shape_ok = x.action.size() == g.n;
    for (const Mat& m : x.action)
        if (m.rows() != d || m.cols() != d) shape_ok = false;
    rep.add("action_shape", shape_ok);
    if (!shape_ok) return rep;
    rep.add("identity_acts_trivially", x.rho(g.identity) == Mat::identity(x.field, d));
    bool homo = true;
    std::string homo_w;
    for (unsigned a = 0; a < g.n && homo; ++a)
        for (unsigned b = 0; b < g.n; ++b)
            if (x.rho(a) * x.rho(b) != x.rho(g.mul(a, b))) {
                homo = false;
                homo_w = "rho(" + g.names[a] + ")rho(" + g.names[b] + ") != rho(product)";
                break;
            }
    rep.add("action_multiplicative", homo, homo_w);
    bool compat = true;
    std::string compat_w;
    for (unsigned f = 0; f < g.n && compat; ++f) {
        const Mat& m = x.rho(f);
        for (size_t i = 0; i < d && compat; ++i)
            for (size_t j = 0; j < d; ++j)
                if (!m.at(i, j).is_zero() &&
                    x.space.degree[i] != g.conj(f, x.space.degree[j])) {
                    compat = false;
                    compat_w = "rho(" + g.names[f] + ") does not transport degree at (" +
                               std::to_string(i) + "," + std::to_string(j) + ")";
                    break;
                }
    }
    rep.add("compatible_with_grading", compat, compat_w);
    return rep;
}

inline CentreObject unit_object(const Group& g, FieldSpec field) {
    CentreObject x;
    x.field = field;
    x.space = make_graded_space(g, {"1"}, {g.identity});
    x.action.assign(g.n, Mat::identity(field, 1));
    return x;
}

inline CentreObject tensor_object(const CentreObject& x, const CentreObject& y) {
    if (!x.group().same_table(y.group())) throw validation_error("tensor_object: group mismatch");
    if (x.field != y.field) throw field_error("tensor_object: field mismatch");
    const Group& g = x.group();
    CentreObject t;
    t.field = x.field;
    std::vector<std::string> labels;
    std::vector<unsigned> degree;
    for (size_t i = 0; i < x.dim(); ++i)
        for (size_t j = 0; j < y.dim(); ++j) {
            labels.push_back(x.space.labels[i] + "." + y.space.labels[j]);
            degree.push_back(g.mul(x.space.degree[i], y.space.degree[j]));
        }
    t.space = make_graded_space(g, std::move(labels), std::move(degree));
    for (unsigned f = 0; f < g.n; ++f) t.action.push_back(kron(x.rho(f), y.rho(f)));
    Report rep = check_centre_object(t);
    if (!rep.pass()) throw validation_error("tensor_object: " + rep.summary());
    return t;
}

inline CentreObject direct_sum(const CentreObject& x, const CentreObject& y) {
    if (!x.group().same_table(y.group())) throw validation_error("direct_sum: group mismatch");
    const Group& g = x.group();
    CentreObject s;
    s.field = x.field;
    std::vector<std::string> labels = x.space.labels;
    std::vector<unsigned> degree = x.space.degree;
    for (size_t j = 0; j < y.dim(); ++j) {
        labels.push_back(y.space.labels[j] + "'");
        degree.push_back(y.space.degree[j]);
    }
    s.space = make_graded_space(g, std::move(labels), std::move(degree));
    for (unsigned f = 0; f < g.n; ++f) {
        Mat m(x.field, x.dim() + y.dim(), x.dim() + y.dim());
        for (size_t i = 0; i < x.dim(); ++i)
            for (size_t j = 0; j < x.dim(); ++j) m.at(i, j) = x.rho(f).at(i, j);
        for (size_t i = 0; i < y.dim(); ++i)
            for (size_t j = 0; j < y.dim(); ++j) m.at(x.dim() + i, x.dim() + j) = y.rho(f).at(i, j);
        s.action.push_back(std::move(m));
    }
    return s;
}

inline GradedSpace underlying_graded(const CentreObject& x) { return x.space; }

inline RepObject underlying_rep(const CentreObject& x) {
    return RepObject{x.field, x.group(), x.space.labels, x.action};
}

inline Report check_rep_object(const RepObject& v) {
    Report rep{"rep_object", {}};
    const Group& g = v.group;
    rep.add("identity_acts_trivially", v.rho(g.identity) == Mat::identity(v.field, v.dim()));
    bool homo = true;
    for (unsigned a = 0; a < g.n && homo; ++a)
        for (unsigned b = 0; b < g.n && homo; ++b)
            if (v.rho(a) * v.rho(b) != v.rho(g.mul(a, b))) homo = false;
    rep.add("action_multiplicative", homo);
    return rep;
}

// ---------------------------------------------------------------------------
// Half-braidings and braidings. Tensor index convention: (i, j) -> i*dim2+j.

/// Graded realization: z_U(z (x) u) = u (x) g^-1(z) for u of degree g.
inline Mat half_braiding_graded(const CentreObject& z, const GradedSpace& u) {
    if (!z.group().same_table(u.group)) throw validation_error("half_braiding: group mismatch");
    const Group& g = z.group();
    const size_t dz = z.dim(), du = u.dim();
    Mat m(z.field, du * dz, dz * du);
    for (size_t uj = 0; uj < du; ++uj) {
        const Mat& rho_inv = z.rho(g.inv(u.degree[uj]));
        for (size_t a = 0; a < dz; ++a)
            for (size_t b = 0; b < dz; ++b) {
                const Scalar& c = rho_inv.at(b, a);
                if (!c.is_zero()) m.at(uj * dz + b, a * du + uj) = c;
            }
    }
    return m;
}

/// Rep realization: z_U(z (x) u) = f(u) (x) z for z of degree f.
inline Mat half_braiding_rep(const CentreObject& z, const RepObject& u) {
    if (!z.group().same_table(u.group)) throw validation_error("half_braiding: group mismatch");
    const size_t dz = z.dim(), du = u.dim();
    Mat m(z.field, du * dz, dz * du);
    for (size_t a = 0; a < dz; ++a) {
        const Mat& rho_f = u.rho(z.space.degree[a]);
        for (size_t uj = 0; uj < du; ++uj)
            for (size_t ui = 0; ui < du; ++ui) {
                const Scalar& c = rho_f.at(ui, uj);
                if (!c.is_zero()) m.at(ui * dz + a, a * du + uj) = c;
            }
    }
    return m;
}

/// Braiding X (x) Y -> Y (x) X: the half-braiding of the first factor at the
/// underlying object of the second, in the chosen realization.
inline Mat braiding(const CentreObject& x, const CentreObject& y, Convention conv) {
    return conv == Convention::rep ? half_braiding_rep(x, underlying_rep(y))
                                   : half_braiding_graded(x, underlying_graded(y));
}

/// Graded + equivariant linear maps X -> Y.
inline bool is_morphism(const CentreObject& x, const CentreObject& y, const Mat& m) {
    if (m.rows() != y.dim() || m.cols() != x.dim()) return false;
    for (size_t i = 0; i < y.dim(); ++i)
        for (size_t j = 0; j < x.dim(); ++j)
            if (!m.at(i, j).is_zero() && y.space.degree[i] != x.space.degree[j]) return false;
    for (unsigned g : generators(x.group()))
        if (y.rho(g) * m != m * x.rho(g)) return false;
    return true;
}

/// Canonical basis of Hom_{Z(G)}(X, Y).
inline std::vector<Mat> hom_space(const CentreObject& x, const CentreObject& y) {
    if (!x.group().same_table(y.group())) throw validation_error("hom_space: group mismatch");
    const Group& g = x.group();
    std::vector<std::pair<size_t, size_t>> unknowns; // (row in Y, col in X)
    for (size_t i = 0; i < y.dim(); ++i)
        for (size_t j = 0; j < x.dim(); ++j)
            if (y.space.degree[i] == x.space.degree[j]) unknowns.push_back({i, j});
    if (unknowns.empty()) return {};
    std::vector<unsigned> gens = generators(g);
    std::vector<Vec> rows;
    const size_t U = unknowns.size();
    for (unsigned gen : gens) {
        // rho_Y(gen) M - M rho_X(gen) = 0, one equation per output entry (i,j)
        for (size_t i = 0; i < y.dim(); ++i)
            for (size_t j = 0; j < x.dim(); ++j) {
                Vec row(U, Scalar::zero(x.field));
                bool nz = false;
                for (size_t u = 0; u < U; ++u) {
                    auto [r, ccol] = unknowns[u];
                    Scalar coeff = Scalar::zero(x.field);
                    if (ccol == j) coeff += y.rho(gen).at(i, r);
                    if (r == i) coeff -= x.rho(gen).at(ccol, j);
                    if (!coeff.is_zero()) {
                        row[u] = coeff;
                        nz = true;
                    }
                }
                if (nz) rows.push_back(std::move(row));
            }
    }
    std::vector<Vec> sol;
    if (rows.empty()) {
        for (size_t u = 0; u < U; ++u) {
            Vec v(U, Scalar::zero(x.field));
            v[u] = Scalar::one(x.field);
            sol.push_back(std::move(v));
        }
    } else {
        sol = nullspace(Mat::from_rows(x.field, U, rows));
    }
    std::vector<Mat> basis;
    for (const Vec& v : sol) {
        Mat m(x.field, y.dim(), x.dim());
        for (size_t u = 0; u < U; ++u) m.at(unknowns[u].first, unknowns[u].second) = v[u];
        basis.push_back(std::move(m));
    }
    return basis;
}

// ---------------------------------------------------------------------------
// Algebras in Z(G)

struct CentreAlgebra {
    CentreObject obj;
    MulTable mul;
    Vec unit;

    size_t dim() const { return obj.dim(); }
    const Group& group() const { return obj.group(); }
    FieldSpec field() const { return obj.field; }
    Vec basis_vec(size_t i) const {
        Vec v(dim(), Scalar::zero(obj.field));
        v[i] = Scalar::one(obj.field);
        return v;
    }
    GradedAlgebra forget() const { return GradedAlgebra{obj.field, obj.space, mul, unit}; }
};

inline Report check_centre_algebra(const CentreAlgebra& c) {
    Report rep{"centre_algebra", {}};
    rep.merge(check_centre_object(c.obj));
    rep.merge(check_graded_algebra(c.forget()));
    const Group& g = c.group();
    bool unit_fixed = true;
    for (unsigned f = 0; f < g.n && unit_fixed; ++f)
        if (!(c.obj.rho(f) * c.unit == c.unit)) unit_fixed = false;
    rep.add("unit_fixed_by_action", unit_fixed);
    bool equivariant = true;
    std::string eq_w;
    for (unsigned f = 0; f < g.n && equivariant; ++f)
        for (size_t i = 0; i < c.dim() && equivariant; ++i)
            for (size_t j = 0; j < c.dim(); ++j) {
                Vec lhs = c.obj.rho(f) * c.mul.mul(c.basis_vec(i), c.basis_vec(j), c.field());
                Vec rhs = c.mul.mul(c.obj.rho(f) * c.basis_vec(i), c.obj.rho(f) * c.basis_vec(j),
                                    c.field());
                if (lhs != rhs) {
                    equivariant = false;
                    eq_w = "f(ab) != f(a)f(b) at f=" + g.names[f] + ", pair (" + std::to_string(i) +
                           "," + std::to_string(j) + ")";
                    break;
                }
            }
    rep.add("action_multiplicative_on_products", equivariant, eq_w);
    return rep;
}

/// ab = f(b)a for homogeneous a of degree f and all b; the two braiding
/// conventions quantify the same family of equations.
inline bool is_commutative(const CentreAlgebra& c) {
    const size_t d = c.dim();
    for (size_t i = 0; i < d; ++i) {
        unsigned f = c.obj.space.degree[i];
        Vec bi = c.basis_vec(i);
        for (size_t j = 0; j < d; ++j) {
            Vec lhs = c.mul.mul(bi, c.basis_vec(j), c.field());
            Vec rhs = c.mul.mul(c.obj.rho(f) * c.basis_vec(j), bi, c.field());
            if (lhs != rhs) return false;
        }
    }
    return true;
}

inline CentreAlgebra unit_centre_algebra(const Group& g, FieldSpec field) {
    CentreAlgebra c;
    c.obj = unit_object(g, field);
    c.mul = MulTable::zero(1);
    c.mul.set(0, 0, 0, Scalar::one(field));
    c.unit = {Scalar::one(field)};
    return c;
}

// ---------------------------------------------------------------------------
// A(H, F, gamma, eps): basis a_{g,f} over a left transversal of G/H and F,
// with relation transport a_{gh,f} = eps_h(f) a_{g, hfh^-1}.

struct MakeAData {
    CentreAlgebra algebra;
    std::vector<unsigned> transversal; // coset representatives (parent indices)
    std::vector<unsigned> f_parent;    // F elements (parent indices, sorted)
};

inline MakeAData make_A(const Group& g, FieldSpec field, const Subgroup& h, const Subgroup& f,
                        const Cocycle2& gamma, const EpsilonTable& eps) {
    for (unsigned e : f.elems)
        if (!h.contains(e)) throw validation_error("make_A: F not contained in H");
    // F normal in H
    for (unsigned x : h.elems) {
        Subgroup cf = conjugate_subgroup(g, f, x);
        if (!(cf == f)) throw validation_error("make_A: F not normal in H");
    }
    SubgroupGroup hg = subgroup_group(g, h);
    SubgroupGroup fg = subgroup_group(g, f);
    if (!gamma.group.same_table(fg.group))
        throw validation_error("make_A: gamma not on F");
    if (!eps.h.same_table(hg.group)) throw validation_error("make_A: eps not on H");
    if (eps.modulus != gamma.modulus) throw validation_error("make_A: eps/gamma modulus mismatch");
    if (field.m() % gamma.modulus != 0)
        throw field_error("make_A: field lacks the needed roots of unity");
    // F positions inside H must match eps.f_elems
    std::vector<unsigned> f_in_h;
    for (unsigned e : f.elems) f_in_h.push_back(hg.from_parent.at(e));
    std::sort(f_in_h.begin(), f_in_h.end());
    if (f_in_h != eps.f_elems) throw validation_error("make_A: eps F-positions mismatch");

    MakeAData out;
    out.transversal = left_transversal(g, h);
    out.f_parent = f.elems;
    const size_t nc = out.transversal.size(), nf = out.f_parent.size();
    auto f_pos = [&](unsigned parent_elem) {
        auto it = std::lower_bound(out.f_parent.begin(), out.f_parent.end(), parent_elem);
        if (it == out.f_parent.end() || *it != parent_elem)
            throw validation_error("make_A: conjugation left F");
        return static_cast<size_t>(it - out.f_parent.begin());
    };
    auto coset_of = [&](unsigned x) -> size_t {
        // index of the transversal element with x in g_c H
        for (size_t c = 0; c < nc; ++c) {
            unsigned rep = out.transversal[c];
            if (h.contains(g.mul(g.inv(rep), x))) return c;
        }
        throw validation_error("make_A: internal coset lookup failure");
    };
    CentreAlgebra alg;
    alg.obj.field = field;
    std::vector<std::string> labels;
    std::vector<unsigned> degree;
    for (size_t c = 0; c < nc; ++c)
        for (size_t fp = 0; fp < nf; ++fp) {
            labels.push_back("a_" + g.names[out.transversal[c]] + "," + g.names[out.f_parent[fp]]);
            degree.push_back(g.conj(out.transversal[c], out.f_parent[fp]));
        }
    alg.obj.space = make_graded_space(g, std::move(labels), std::move(degree));
    const size_t D = nc * nf;
    auto idx = [&](size_t c, size_t fp) { return c * nf + fp; };
    alg.mul = MulTable::zero(D);
    for (size_t c = 0; c < nc; ++c)
        for (size_t f1 = 0; f1 < nf; ++f1)
            for (size_t f2 = 0; f2 < nf; ++f2) {
                unsigned p1 = fg.from_parent.at(out.f_parent[f1]);
                unsigned p2 = fg.from_parent.at(out.f_parent[f2]);
                unsigned prod_parent = g.mul(out.f_parent[f1], out.f_parent[f2]);
                alg.mul.set(idx(c, f1), idx(c, f2), idx(c, f_pos(prod_parent)),
                            gamma.value(field, p1, p2));
            }
    for (unsigned gp = 0; gp < g.n; ++gp) {
        Mat m(field, D, D);
        for (size_t c = 0; c < nc; ++c) {
            unsigned moved = g.mul(gp, out.transversal[c]);
            size_t c2 = coset_of(moved);
            unsigned hh = g.mul(g.inv(out.transversal[c2]), moved); // in H
            unsigned hpos = hg.from_parent.at(hh);
            for (size_t fp = 0; fp < nf; ++fp) {
                unsigned f_elem = out.f_parent[fp];
                unsigned conj_parent = g.conj(hh, f_elem);
                size_t fp2 = f_pos(conj_parent);
                Scalar coeff = root_of_unity(field, eps.modulus,
                                             eps.at(hpos, eps.f_index(hg.from_parent.at(f_elem))));
                m.at(idx(c2, fp2), idx(c, fp)) = coeff;
            }
        }
        alg.obj.action.push_back(std::move(m));
    }
    alg.unit.assign(D, Scalar::zero(field));
    unsigned e_fpos = static_cast<unsigned>(f_pos(g.identity));
    for (size_t c = 0; c < nc; ++c) alg.unit[idx(c, e_fpos)] = Scalar::one(field);
    Report rep = check_centre_algebra(alg);
    if (!rep.pass())
        throw validation_error("make_A: relations inconsistent (eps invalid): " + rep.summary());
    if (!is_commutative(alg))
        throw validation_error("make_A: result not commutative (eps invalid)");
    out.algebra = std::move(alg);
    return out;
}

/// A(H, H, gamma) with the action table induced from gamma.
inline MakeAData make_A_full(const Group& g, FieldSpec field, const Subgroup& h,
                             const Cocycle2& gamma) {
    SubgroupGroup hg = subgroup_group(g, h);
    return make_A(g, field, h, h, gamma, epsilon_from_gamma(hg.group, gamma));
}

// ---------------------------------------------------------------------------
// Duality, twist, trace

struct DualData {
    CentreObject dual;
    Mat ev;   // 1 x (dim*dim), on X^v (x) X
    Mat coev; // (dim*dim) x 1, into X (x) X^v
};

inline DualData dual_object(const CentreObject& x) {
    const Group& g = x.group();
    const size_t d = x.dim();
    DualData out;
    out.dual.field = x.field;
    std::vector<std::string> labels;
    std::vector<unsigned> degree;
    for (size_t i = 0; i < d; ++i) {
        labels.push_back(x.space.labels[i] + "*");
        degree.push_back(g.inv(x.space.degree[i]));
    }
    out.dual.space = make_graded_space(g, std::move(labels), std::move(degree));
    for (unsigned f = 0; f < g.n; ++f) out.dual.action.push_back(x.rho(g.inv(f)).transpose());
    out.ev = Mat(x.field, 1, d * d);
    for (size_t i = 0; i < d; ++i) out.ev.at(0, i * d + i) = Scalar::one(x.field);
    out.coev = Mat(x.field, d * d, 1);
    for (size_t i = 0; i < d; ++i) out.coev.at(i * d + i, 0) = Scalar::one(x.field);
    return out;
}

/// theta(x) = rho(g)(x) for x of degree g.
inline Mat ribbon_twist(const CentreObject& x) {
    const size_t d = x.dim();
    Mat m(x.field, d, d);
    for (size_t j = 0; j < d; ++j) {
        const Mat& r = x.rho(x.space.degree[j]);
        for (size_t i = 0; i < d; ++i) m.at(i, j) = r.at(i, j);
    }
    return m;
}

/// Categorical trace: ev . c_{X,X^v} . (theta f (x) id) . coev, rep braiding.
inline Scalar trace_endo(const CentreObject& x, const Mat& f) {
    if (!is_morphism(x, x, f))
        throw validation_error("trace: map is not a morphism of Z(G)");
    DualData d = dual_object(x);
    Mat tf = ribbon_twist(x) * f;
    Mat step = kron(tf, Mat::identity(x.field, x.dim())) * d.coev;
    Mat c = braiding(x, d.dual, Convention::rep);
    Mat res = d.ev * (c * step);
    return res.at(0, 0);
}

struct PurePairing {
    bool nondegenerate = false;
    size_t dim_xy = 0, dim_yx = 0;
    Mat gram;
};

/// Nondegeneracy of (f, g) -> tr(f g) on Hom(X,Y) x Hom(Y,X).
inline PurePairing pure_pairing_check(const CentreObject& x, const CentreObject& y) {
    PurePairing out;
    std::vector<Mat> fxy = hom_space(x, y);
    std::vector<Mat> fyx = hom_space(y, x);
    out.dim_xy = fxy.size();
    out.dim_yx = fyx.size();
    out.gram = Mat(x.field, fxy.size(), fyx.size());
    for (size_t a = 0; a < fxy.size(); ++a)
        for (size_t b = 0; b < fyx.size(); ++b)
            out.gram.at(a, b) = trace_endo(y, fxy[a] * fyx[b]);
    out.nondegenerate = (out.dim_xy == out.dim_yx) && rank(out.gram) == out.dim_xy;
    return out;
}

// ---------------------------------------------------------------------------
// Left and right centres: maximal graded action-stable subspace satisfying
// the braided commutation against all of B.

struct SubCentreResult {
    CentreAlgebra algebra;
    Mat inclusion;                      // algebra coords -> B coords
    std::vector<Vec> basis;             // canonical vectors inside B
    std::vector<std::vector<Vec>> per_degree; // canonical basis split by degree
};

/// A coordinate-level view of an algebra in Z(G) large enough to host
/// subalgebra computations: degrees per coordinate, multiplication, unit,
/// and the action as a function. Avoids materializing dense action
/// matrices for induced ambient algebras.
struct AmbientView {
    const Group* group = nullptr;
    FieldSpec field;
    std::vector<unsigned> degree;
    const MulTable* mul = nullptr;
    Vec unit;
    std::function<Vec(unsigned, const Vec&)> act;

    size_t dim() const { return degree.size(); }
    Vec basis_vec(size_t i) const {
        Vec v(dim(), Scalar::zero(field));
        v[i] = Scalar::one(field);
        return v;
    }
};

inline AmbientView view_of(const CentreAlgebra& b) {
    AmbientView v;
    v.group = &b.group();
    v.field = b.field();
    v.degree = b.obj.space.degree;
    v.mul = &b.mul;
    v.unit = b.unit;
    const CentreObject* obj = &b.obj;
    v.act = [obj](unsigned f, const Vec& x) { return obj->rho(f) * x; };
    return v;
}

namespace detail {

/// Assemble a CentreAlgebra from per-degree solution bases inside an ambient
/// algebra. Each degree-f basis vector must be supported on the ambient
/// degree-f coordinates; products, actions and the unit are expressed per
/// degree.
inline SubCentreResult build_subalgebra(const AmbientView& b, std::vector<std::vector<Vec>> per_degree,
                                        const std::string& what) {
    const Group& g = *b.group;
    SubCentreResult out;
    out.per_degree = std::move(per_degree);
    std::vector<std::vector<size_t>> coords(g.n);
    for (size_t i = 0; i < b.dim(); ++i) coords[b.degree[i]].push_back(i);
    std::vector<size_t> offset(g.n, 0);
    std::vector<unsigned> degree;
    std::vector<std::string> labels;
    for (unsigned f = 0; f < g.n; ++f) {
        offset[f] = out.basis.size();
        for (size_t k = 0; k < out.per_degree[f].size(); ++k) {
            out.basis.push_back(out.per_degree[f][k]);
            degree.push_back(f);
            labels.push_back(g.names[f] + "#" + std::to_string(k));
        }
    }
    const size_t d = out.basis.size();
    // local express: coordinates of `full` in the degree-f basis
    auto express_deg = [&](unsigned f, const Vec& full) -> std::optional<Vec> {
        const auto& cc = coords[f];
        for (size_t i = 0; i < full.size(); ++i)
            if (!full[i].is_zero() && b.degree[i] != f) return std::nullopt;
        const auto& bas = out.per_degree[f];
        if (bas.empty()) {
            for (size_t c : cc)
                if (!full[c].is_zero()) return std::nullopt;
            return Vec{};
        }
        Mat m(b.field, cc.size(), bas.size());
        Vec rhs(cc.size(), Scalar::zero(b.field));
        for (size_t r = 0; r < cc.size(); ++r) {
            for (size_t j = 0; j < bas.size(); ++j) m.at(r, j) = bas[j][cc[r]];
            rhs[r] = full[cc[r]];
        }
        return solve(m, rhs);
    };
    CentreAlgebra alg;
    alg.obj.field = b.field;
    alg.obj.space = make_graded_space(g, std::move(labels), std::move(degree));
    out.inclusion = d == 0 ? Mat(b.field, b.dim(), 0)
                           : Mat::from_columns(b.field, b.dim(), out.basis);
    for (unsigned f = 0; f < g.n; ++f) {
        Mat m(b.field, d, d);
        for (size_t j = 0; j < d; ++j) {
            unsigned degj = alg.obj.space.degree[j];
            unsigned target = g.conj(f, degj);
            Vec moved = b.act(f, out.basis[j]);
            auto cd = express_deg(target, moved);
            if (!cd) throw validation_error(what + ": subspace not action-stable");
            for (size_t k = 0; k < cd->size(); ++k) m.at(offset[target] + k, j) = (*cd)[k];
        }
        alg.obj.action.push_back(std::move(m));
    }
    alg.mul = MulTable::zero(d);
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) {
            unsigned target = g.mul(alg.obj.space.degree[i], alg.obj.space.degree[j]);
            Vec prod = b.mul->mul(out.basis[i], out.basis[j], b.field);
            auto cd = express_deg(target, prod);
            if (!cd) throw validation_error(what + ": subspace not closed under product");
            for (size_t k = 0; k < cd->size(); ++k)
                if (!(*cd)[k].is_zero()) alg.mul.set(i, j, offset[target] + k, (*cd)[k]);
        }
    auto unit_cd = express_deg(g.identity, b.unit);
    if (!unit_cd) throw validation_error(what + ": unit not inside the subspace");
    alg.unit.assign(d, Scalar::zero(b.field));
    for (size_t k = 0; k < unit_cd->size(); ++k) alg.unit[offset[g.identity] + k] = (*unit_cd)[k];
    out.algebra = std::move(alg);
    return out;
}

} // namespace detail

/// Left centre under the given convention:
///   rep:    s in B_f with s b = f(b) s for all b;
///   graded: s with s b = b g^-1(s) for all homogeneous b of degree g.
inline SubCentreResult left_centre(const AmbientView& b, Convention conv) {
    const Group& g = *b.group;
    const size_t d = b.dim();
    std::vector<std::vector<Vec>> per_degree(g.n);
    for (unsigned f = 0; f < g.n; ++f) {
        std::vector<size_t> idx;
        for (size_t i = 0; i < d; ++i)
            if (b.degree[i] == f) idx.push_back(i);
        if (idx.empty()) continue;
        std::vector<Vec> rows;
        RowCollector rc(b.field, idx.size(), d);
        for (size_t j = 0; j < d; ++j) {
            Vec fb = conv == Convention::rep ? b.act(f, b.basis_vec(j)) : Vec{};
            for (size_t u = 0; u < idx.size(); ++u) {
                size_t i = idx[u];
                for (const auto& [k, c] : b.mul->at(i, j)) rc.add(k, u, c); // s_i * b_j
                if (conv == Convention::rep) {
                    // minus f(b_j) * s_i
                    for (size_t l = 0; l < d; ++l) {
                        if (fb[l].is_zero()) continue;
                        for (const auto& [k, c] : b.mul->at(l, i)) rc.sub(k, u, fb[l] * c);
                    }
                } else {
                    // minus b_j * (g^-1 s_i), g = |b_j|
                    Vec gs = b.act(g.inv(b.degree[j]), b.basis_vec(i));
                    for (size_t l = 0; l < d; ++l) {
                        if (gs[l].is_zero()) continue;
                        for (const auto& [k, c] : b.mul->at(j, l)) rc.sub(k, u, gs[l] * c);
                    }
                }
            }
            rc.flush(rows);
        }
        std::vector<Vec> sol;
        if (rows.empty()) {
            for (size_t u = 0; u < idx.size(); ++u) {
                Vec v(idx.size(), Scalar::zero(b.field));
                v[u] = Scalar::one(b.field);
                sol.push_back(std::move(v));
            }
        } else {
            sol = nullspace(Mat::from_rows(b.field, idx.size(), rows));
        }
        for (const Vec& s : sol) {
            Vec full(d, Scalar::zero(b.field));
            for (size_t u = 0; u < idx.size(); ++u) full[idx[u]] = s[u];
            per_degree[f].push_back(std::move(full));
        }
    }
    return detail::build_subalgebra(b, std::move(per_degree), "left_centre");
}

inline SubCentreResult left_centre(const CentreAlgebra& b, Convention conv) {
    return left_centre(view_of(b), conv);
}

/// Right centre: rep: b s = |b|(s) b; graded: s in B_f with b s = s f^-1(b),
/// both derived from mu . c_{B,S} = mu with the matching convention.
inline SubCentreResult right_centre(const AmbientView& b, Convention conv) {
    const Group& g = *b.group;
    const size_t d = b.dim();
    std::vector<std::vector<Vec>> per_degree(g.n);
    for (unsigned f = 0; f < g.n; ++f) {
        std::vector<size_t> idx;
        for (size_t i = 0; i < d; ++i)
            if (b.degree[i] == f) idx.push_back(i);
        if (idx.empty()) continue;
        std::vector<Vec> rows;
        RowCollector rc(b.field, idx.size(), d);
        for (size_t j = 0; j < d; ++j) {
            unsigned degj = b.degree[j];
            Vec fb = conv == Convention::graded ? b.act(g.inv(f), b.basis_vec(j)) : Vec{};
            for (size_t u = 0; u < idx.size(); ++u) {
                size_t i = idx[u];
                for (const auto& [k, c] : b.mul->at(j, i)) rc.add(k, u, c); // b_j * s_i
                if (conv == Convention::rep) {
                    // minus |b_j|(s_i) * b_j
                    Vec gs = b.act(degj, b.basis_vec(i));
                    for (size_t l = 0; l < d; ++l) {
                        if (gs[l].is_zero()) continue;
                        for (const auto& [k, c] : b.mul->at(l, j)) rc.sub(k, u, gs[l] * c);
                    }
                } else {
                    // minus s_i * (f^-1 b_j), f = |s_i|
                    for (size_t l = 0; l < d; ++l) {
                        if (fb[l].is_zero()) continue;
                        for (const auto& [k, c] : b.mul->at(i, l)) rc.sub(k, u, fb[l] * c);
                    }
                }
            }
            rc.flush(rows);
        }
        std::vector<Vec> sol;
        if (rows.empty()) {
            for (size_t u = 0; u < idx.size(); ++u) {
                Vec v(idx.size(), Scalar::zero(b.field));
                v[u] = Scalar::one(b.field);
                sol.push_back(std::move(v));
            }
        } else {
            sol = nullspace(Mat::from_rows(b.field, idx.size(), rows));
        }
        for (const Vec& s : sol) {
            Vec full(d, Scalar::zero(b.field));
            for (size_t u = 0; u < idx.size(); ++u) full[idx[u]] = s[u];
            per_degree[f].push_back(std::move(full));
        }
    }
    return detail::build_subalgebra(b, std::move(per_degree), "right_centre");
}

inline SubCentreResult right_centre(const CentreAlgebra& b, Convention conv) {
    return right_centre(view_of(b), conv);
}

} // namespace centra
