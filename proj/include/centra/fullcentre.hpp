#pragma once

// Full centres in both realizations, the induction right adjoint R with its
// lax monoidal structure, the left-centre theorem verifier, Morita
// verification, and the classifier to (H, F, gamma, eps).
//
// Action conventions (fixed throughout): grading |z(g)| = g f g^-1, action
// (h z)(g) = z(gh), universal map zbar(g) = zeta(g(z)). This is the member
// of the two mirror conventions consistent with the grading transport
// invariant; it is enforced by checks, not assumed.

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "centra/centre.hpp"
#include "centra/cohomology.hpp"
#include "centra/error.hpp"
#include "centra/graded.hpp"
#include "centra/group.hpp"
#include "centra/matrix.hpp"
#include "centra/random.hpp"
#include "centra/report.hpp"
#include "centra/repworld.hpp"

namespace centra {

// ---------------------------------------------------------------------------
// The induction adjoint R, concretely.
//
// graded realization: R(X) = functions G -> X, basis (g,i) at index g*dX+i,
//   degree g^-1 |x_i| g, action (h u)(g) = u(gh).
// rep realization: R(V) = V (x) k[G], basis (i,g) at index i*|G|+g,
//   degree g, action h(v (x) e_g) = h(v) (x) e_{hgh^-1}.

inline CentreObject R_graded(const Group& g, FieldSpec field, const GradedSpace& x) {
    const size_t dx = x.dim();
    CentreObject r;
    r.field = field;
    std::vector<std::string> labels;
    std::vector<unsigned> degree;
    for (unsigned gg = 0; gg < g.n; ++gg)
        for (size_t i = 0; i < dx; ++i) {
            labels.push_back(g.names[gg] + ":" + x.labels[i]);
            degree.push_back(g.mul(g.mul(g.inv(gg), x.degree[i]), gg));
        }
    r.space = make_graded_space(g, std::move(labels), std::move(degree));
    for (unsigned h = 0; h < g.n; ++h) {
        Mat m(field, g.n * dx, g.n * dx);
        for (unsigned gg = 0; gg < g.n; ++gg) {
            unsigned tgt = g.mul(gg, g.inv(h));
            for (size_t i = 0; i < dx; ++i)
                m.at(tgt * dx + i, gg * dx + i) = Scalar::one(field);
        }
        r.action.push_back(std::move(m));
    }
    return r;
}

inline CentreObject R_rep(const RepObject& v) {
    const Group& g = v.group;
    const size_t dv = v.dim();
    CentreObject r;
    r.field = v.field;
    std::vector<std::string> labels;
    std::vector<unsigned> degree;
    for (size_t i = 0; i < dv; ++i)
        for (unsigned gg = 0; gg < g.n; ++gg) {
            labels.push_back(v.labels[i] + ":" + g.names[gg]);
            degree.push_back(gg);
        }
    r.space = make_graded_space(g, std::move(labels), std::move(degree));
    for (unsigned h = 0; h < g.n; ++h) {
        Mat m(v.field, dv * g.n, dv * g.n);
        for (size_t i = 0; i < dv; ++i)
            for (size_t i2 = 0; i2 < dv; ++i2) {
                const Scalar& c = v.rho(h).at(i2, i);
                if (c.is_zero()) continue;
                for (unsigned gg = 0; gg < g.n; ++gg)
                    m.at(i2 * g.n + g.conj(h, gg), i * g.n + gg) = c;
            }
        r.action.push_back(std::move(m));
    }
    return r;
}

/// alpha_U : U -> RF(U), graded realization: alpha(u)(g) = g(u).
inline Mat alpha_graded(const CentreObject& u) {
    const Group& g = u.group();
    const size_t du = u.dim();
    Mat m(u.field, g.n * du, du);
    for (unsigned gg = 0; gg < g.n; ++gg)
        for (size_t a = 0; a < du; ++a)
            for (size_t a2 = 0; a2 < du; ++a2) {
                const Scalar& c = u.rho(gg).at(a2, a);
                if (!c.is_zero()) m.at(gg * du + a2, a) = c;
            }
    return m;
}

/// beta_X : FR(X) -> X, graded realization: beta(u) = u(e).
inline Mat beta_graded(const Group& g, FieldSpec field, const GradedSpace& x) {
    const size_t dx = x.dim();
    Mat m(field, dx, g.n * dx);
    for (size_t i = 0; i < dx; ++i) m.at(i, g.identity * dx + i) = Scalar::one(field);
    return m;
}

/// R(t) for a map of graded spaces t : X -> Y (applied pointwise).
inline Mat R_graded_map(const Group& g, const Mat& t) {
    Mat m(t.field(), g.n * t.rows(), g.n * t.cols());
    for (unsigned gg = 0; gg < g.n; ++gg)
        for (size_t i = 0; i < t.rows(); ++i)
            for (size_t j = 0; j < t.cols(); ++j)
                if (!t.at(i, j).is_zero()) m.at(gg * t.rows() + i, gg * t.cols() + j) = t.at(i, j);
    return m;
}

/// Direct lax structure map R(X) (x) R(Y) -> R(X (x) Y): pointwise pairing.
inline Mat lax_graded(const Group& g, FieldSpec field, const GradedSpace& x, const GradedSpace& y) {
    const size_t dx = x.dim(), dy = y.dim();
    const size_t rxy = g.n * dx * dy;
    const size_t cx = g.n * dx, cy = g.n * dy;
    Mat m(field, rxy, cx * cy);
    for (unsigned gg = 0; gg < g.n; ++gg)
        for (size_t i = 0; i < dx; ++i)
            for (size_t j = 0; j < dy; ++j)
                m.at(gg * dx * dy + i * dy + j, (gg * dx + i) * cy + (gg * dy + j)) =
                    Scalar::one(field);
    return m;
}

/// alpha_U : U -> RF(U), rep realization: alpha(u) = sum_g u_g (x) e_g.
inline Mat alpha_rep(const CentreObject& u) {
    const Group& g = u.group();
    const size_t du = u.dim();
    Mat m(u.field, du * g.n, du);
    for (size_t a = 0; a < du; ++a)
        m.at(a * g.n + u.space.degree[a], a) = Scalar::one(u.field);
    return m;
}

/// beta_V : FR(V) -> V, rep realization: v (x) e_g -> v.
inline Mat beta_rep(const RepObject& v) {
    const Group& g = v.group;
    const size_t dv = v.dim();
    Mat m(v.field, dv, dv * g.n);
    for (size_t i = 0; i < dv; ++i)
        for (unsigned gg = 0; gg < g.n; ++gg)
            m.at(i, i * g.n + gg) = Scalar::one(v.field);
    return m;
}

/// R(t) for an equivariant map t : V -> W (tensored with k[G]).
inline Mat R_rep_map(const Group& g, const Mat& t) {
    Mat m(t.field(), t.rows() * g.n, t.cols() * g.n);
    for (size_t i = 0; i < t.rows(); ++i)
        for (size_t j = 0; j < t.cols(); ++j)
            if (!t.at(i, j).is_zero())
                for (unsigned gg = 0; gg < g.n; ++gg) m.at(i * g.n + gg, j * g.n + gg) = t.at(i, j);
    return m;
}

/// Direct lax map, rep realization: (v (x) e_g)(w (x) e_h) -> (v (x) w) (x) e_{gh}.
inline Mat lax_rep(const Group& g, FieldSpec field, size_t dv, size_t dw) {
    Mat m(field, dv * dw * g.n, (dv * g.n) * (dw * g.n));
    for (size_t i = 0; i < dv; ++i)
        for (size_t j = 0; j < dw; ++j)
            for (unsigned a = 0; a < g.n; ++a)
                for (unsigned b = 0; b < g.n; ++b)
                    m.at((i * dw + j) * g.n + g.mul(a, b),
                         (i * g.n + a) * (dw * g.n) + (j * g.n + b)) = Scalar::one(field);
    return m;
}

// ---------------------------------------------------------------------------
// Transported algebras on R(A). The coordinate-level data (degrees, sparse
// multiplication, unit, functional action) carries every computation; the
// dense CentreAlgebra forms below are for small objects and tests.

struct TransportedAlgebra {
    Group group;
    FieldSpec field;
    Convention realization = Convention::graded;
    std::vector<unsigned> degree;
    MulTable mul;
    Vec unit;
    size_t block = 0;             // dim A
    std::vector<Mat> base_action; // rep realization only: A's action matrices

    AmbientView view() const {
        AmbientView v;
        v.group = &group;
        v.field = field;
        v.degree = degree;
        v.mul = &mul;
        v.unit = unit;
        const TransportedAlgebra* self = this;
        if (realization == Convention::graded) {
            v.act = [self](unsigned h, const Vec& x) {
                const Group& g = self->group;
                const size_t da = self->block;
                Vec out(x.size(), Scalar::zero(self->field));
                for (unsigned gg = 0; gg < g.n; ++gg) {
                    unsigned src = g.mul(gg, h); // (h z)(g) = z(g h)
                    for (size_t i = 0; i < da; ++i) out[gg * da + i] = x[src * da + i];
                }
                return out;
            };
        } else {
            v.act = [self](unsigned h, const Vec& x) {
                const Group& g = self->group;
                const size_t da = self->block;
                Vec out(x.size(), Scalar::zero(self->field));
                const Mat& rho = self->base_action[h];
                for (size_t i = 0; i < da; ++i)
                    for (unsigned gg = 0; gg < g.n; ++gg) {
                        const Scalar& c = x[i * g.n + gg];
                        if (c.is_zero()) continue;
                        unsigned tg = g.conj(h, gg);
                        for (size_t i2 = 0; i2 < da; ++i2) {
                            const Scalar& r = rho.at(i2, i);
                            if (!r.is_zero()) out[i2 * g.n + tg] += r * c;
                        }
                    }
                return out;
            };
        }
        return v;
    }
};

inline TransportedAlgebra transported_graded_data(const GradedAlgebra& a) {
    const Group& g = a.group();
    const size_t da = a.dim();
    TransportedAlgebra t;
    t.group = g;
    t.field = a.field;
    t.realization = Convention::graded;
    t.block = da;
    for (unsigned gg = 0; gg < g.n; ++gg)
        for (size_t i = 0; i < da; ++i)
            t.degree.push_back(g.mul(g.mul(g.inv(gg), a.space.degree[i]), gg));
    t.mul = MulTable::zero(g.n * da);
    for (unsigned gg = 0; gg < g.n; ++gg)
        for (size_t i = 0; i < da; ++i)
            for (size_t j = 0; j < da; ++j)
                for (const auto& [k, c] : a.mul.at(i, j))
                    t.mul.set(gg * da + i, gg * da + j, gg * da + k, c);
    t.unit.assign(g.n * da, Scalar::zero(a.field));
    for (unsigned gg = 0; gg < g.n; ++gg)
        for (size_t i = 0; i < da; ++i) t.unit[gg * da + i] = a.unit[i];
    return t;
}

inline TransportedAlgebra transported_rep_data(const GAlgebra& a) {
    const Group& g = a.group;
    const size_t da = a.dim();
    TransportedAlgebra t;
    t.group = g;
    t.field = a.field;
    t.realization = Convention::rep;
    t.block = da;
    t.base_action = a.action;
    for (size_t i = 0; i < da; ++i)
        for (unsigned gg = 0; gg < g.n; ++gg) t.degree.push_back(gg);
    t.mul = MulTable::zero(da * g.n);
    for (size_t i = 0; i < da; ++i)
        for (size_t j = 0; j < da; ++j)
            for (const auto& [k, c] : a.mul.at(i, j))
                for (unsigned x = 0; x < g.n; ++x)
                    for (unsigned y = 0; y < g.n; ++y)
                        t.mul.set(i * g.n + x, j * g.n + y, k * g.n + g.mul(x, y), c);
    t.unit.assign(da * g.n, Scalar::zero(a.field));
    for (size_t i = 0; i < da; ++i) t.unit[i * g.n + g.identity] = a.unit[i];
    return t;
}

inline CentreAlgebra transported_algebra_graded(const GradedAlgebra& a) {
    const Group& g = a.group();
    const size_t da = a.dim();
    CentreAlgebra b;
    b.obj = R_graded(g, a.field, a.space);
    b.mul = MulTable::zero(g.n * da);
    for (unsigned gg = 0; gg < g.n; ++gg)
        for (size_t i = 0; i < da; ++i)
            for (size_t j = 0; j < da; ++j)
                for (const auto& [k, c] : a.mul.at(i, j))
                    b.mul.set(gg * da + i, gg * da + j, gg * da + k, c);
    b.unit.assign(g.n * da, Scalar::zero(a.field));
    for (unsigned gg = 0; gg < g.n; ++gg)
        for (size_t i = 0; i < da; ++i) b.unit[gg * da + i] = a.unit[i];
    return b;
}

inline CentreAlgebra transported_algebra_rep(const GAlgebra& a) {
    const Group& g = a.group;
    const size_t da = a.dim();
    RepObject v{a.field, a.group, a.labels, a.action};
    CentreAlgebra b;
    b.obj = R_rep(v);
    b.mul = MulTable::zero(da * g.n);
    for (size_t i = 0; i < da; ++i)
        for (size_t j = 0; j < da; ++j)
            for (const auto& [k, c] : a.mul.at(i, j))
                for (unsigned x = 0; x < g.n; ++x)
                    for (unsigned y = 0; y < g.n; ++y)
                        b.mul.set(i * g.n + x, j * g.n + y, k * g.n + g.mul(x, y), c);
    b.unit.assign(da * g.n, Scalar::zero(a.field));
    for (size_t i = 0; i < da; ++i) b.unit[i * g.n + g.identity] = a.unit[i];
    return b;
}

// ---------------------------------------------------------------------------
// Full centres

struct FullCentreResult {
    Convention realization = Convention::graded;
    CentreAlgebra centre;
    Mat inclusion;                            // centre coords -> ambient R(A) coords
    std::vector<Vec> basis;                   // ambient solution basis, global order
    std::vector<std::vector<Vec>> per_degree; // ambient solution basis per degree
    std::vector<size_t> offset;               // degree -> first global basis index
    std::vector<unsigned> ambient_degree;     // degree of each ambient coordinate
    Mat evaluation;                           // dim A x dim Z, the map Z(A) -> A
};

/// Coordinates of an ambient vector (supported in one degree) in the
/// centre's basis, as global coordinates.
inline std::optional<Vec> express_in_centre(const FullCentreResult& fc, unsigned f,
                                            const Vec& ambient) {
    FieldSpec field = fc.centre.field();
    std::vector<size_t> cc;
    for (size_t i = 0; i < fc.ambient_degree.size(); ++i)
        if (fc.ambient_degree[i] == f) cc.push_back(i);
    for (size_t i = 0; i < ambient.size(); ++i)
        if (!ambient[i].is_zero() && fc.ambient_degree[i] != f) return std::nullopt;
    const auto& bas = fc.per_degree[f];
    Vec global(fc.centre.dim(), Scalar::zero(field));
    if (bas.empty()) {
        for (size_t c : cc)
            if (!ambient[c].is_zero()) return std::nullopt;
        return global;
    }
    Mat m(field, cc.size(), bas.size());
    Vec rhs(cc.size(), Scalar::zero(field));
    for (size_t r = 0; r < cc.size(); ++r) {
        for (size_t j = 0; j < bas.size(); ++j) m.at(r, j) = bas[j][cc[r]];
        rhs[r] = ambient[cc[r]];
    }
    auto local = solve(m, rhs);
    if (!local) return std::nullopt;
    for (size_t j = 0; j < local->size(); ++j) global[fc.offset[f] + j] = (*local)[j];
    return global;
}

namespace detail {

inline FullCentreResult assemble_full_centre(Convention realization, const AmbientView& ambient,
                                             std::vector<std::vector<Vec>> per_degree,
                                             const std::string& what) {
    SubCentreResult sub = build_subalgebra(ambient, std::move(per_degree), what);
    FullCentreResult fc;
    fc.realization = realization;
    fc.centre = std::move(sub.algebra);
    fc.inclusion = std::move(sub.inclusion);
    fc.basis = std::move(sub.basis);
    fc.per_degree = std::move(sub.per_degree);
    fc.ambient_degree = ambient.degree;
    const Group& g = *ambient.group;
    fc.offset.assign(g.n, 0);
    size_t acc = 0;
    for (unsigned f = 0; f < g.n; ++f) {
        fc.offset[f] = acc;
        acc += fc.per_degree[f].size();
    }
    return fc;
}

} // namespace detail

/// Z(A) for a graded algebra: solutions of a z(g) = z(hg) a for all
/// homogeneous a of degree h, solved degree by degree.
inline FullCentreResult full_centre_graded(const GradedAlgebra& a, size_t bound = 4096) {
    const Group& g = a.group();
    const size_t da = a.dim();
    if (g.n * da > bound)
        throw bound_error("full_centre_graded: |G| * dim A exceeds bound");
    FieldSpec field = a.field;
    std::vector<std::vector<Vec>> per_degree(g.n);
    for (unsigned f = 0; f < g.n; ++f) {
        // unknowns: ambient coordinates (gg, i) with |b_i| = gg f gg^-1
        std::vector<std::pair<unsigned, size_t>> unk;
        std::vector<long> upos(g.n * da, -1);
        for (unsigned gg = 0; gg < g.n; ++gg)
            for (size_t i = 0; i < da; ++i)
                if (a.space.degree[i] == g.conj(gg, f)) {
                    upos[gg * da + i] = static_cast<long>(unk.size());
                    unk.push_back({gg, i});
                }
        if (unk.empty()) continue;
        std::vector<Vec> rows;
        RowCollector rc(field, unk.size(), da);
        for (size_t j = 0; j < da; ++j) {
            unsigned h = a.space.degree[j];
            for (unsigned gg = 0; gg < g.n; ++gg) {
                unsigned hg = g.mul(h, gg);
                for (size_t u = 0; u < unk.size(); ++u) {
                    auto [gu, iu] = unk[u];
                    if (gu == gg) // + b_j * (z at gg = b_iu component)
                        for (const auto& [k, c] : a.mul.at(j, iu)) rc.add(k, u, c);
                    if (gu == hg) // - (z at hg) * b_j
                        for (const auto& [k, c] : a.mul.at(iu, j)) rc.sub(k, u, c);
                }
                rc.flush(rows);
            }
        }
        std::vector<Vec> sol;
        if (rows.empty()) {
            for (size_t u = 0; u < unk.size(); ++u) {
                Vec v(unk.size(), Scalar::zero(field));
                v[u] = Scalar::one(field);
                sol.push_back(std::move(v));
            }
        } else {
            sol = nullspace(Mat::from_rows(field, unk.size(), rows));
        }
        for (const Vec& s : sol) {
            Vec amb(g.n * da, Scalar::zero(field));
            for (size_t u = 0; u < unk.size(); ++u)
                amb[unk[u].first * da + unk[u].second] = s[u];
            per_degree[f].push_back(std::move(amb));
        }
    }
    TransportedAlgebra ambient = transported_graded_data(a);
    FullCentreResult fc = detail::assemble_full_centre(Convention::graded, ambient.view(),
                                                       std::move(per_degree), "full_centre");
    fc.evaluation = Mat(field, da, fc.centre.dim());
    for (size_t c = 0; c < fc.basis.size(); ++c)
        for (size_t i = 0; i < da; ++i)
            fc.evaluation.at(i, c) = fc.basis[c][g.identity * da + i];
    return fc;
}

/// Z(A) for a G-algebra: per-g twisted centralizers {x : x a = g(a) x}.
inline FullCentreResult full_centre_repg(const GAlgebra& a, size_t bound = 4096) {
    const Group& g = a.group;
    const size_t da = a.dim();
    if (g.n * da > bound) throw bound_error("full_centre_repg: |G| * dim A exceeds bound");
    FieldSpec field = a.field;
    std::vector<std::vector<Vec>> per_degree(g.n);
    for (unsigned gg = 0; gg < g.n; ++gg) {
        std::vector<Vec> rows;
        RowCollector rc(field, da, da);
        for (size_t j = 0; j < da; ++j) {
            Vec w = a.rho(gg) * a.basis_vec(j); // g(b_j)
            for (size_t i = 0; i < da; ++i) {
                for (const auto& [k, c] : a.mul.at(i, j)) rc.add(k, i, c); // x b_j
                for (size_t l = 0; l < da; ++l) {
                    if (w[l].is_zero()) continue;
                    for (const auto& [k, c] : a.mul.at(l, i)) rc.sub(k, i, w[l] * c); // g(b_j) x
                }
            }
            rc.flush(rows);
        }
        std::vector<Vec> sol;
        if (rows.empty()) {
            for (size_t i = 0; i < da; ++i) {
                Vec v(da, Scalar::zero(field));
                v[i] = Scalar::one(field);
                sol.push_back(std::move(v));
            }
        } else {
            sol = nullspace(Mat::from_rows(field, da, rows));
        }
        for (const Vec& s : sol) {
            Vec amb(da * g.n, Scalar::zero(field));
            for (size_t i = 0; i < da; ++i) amb[i * g.n + gg] = s[i];
            per_degree[gg].push_back(std::move(amb));
        }
    }
    TransportedAlgebra ambient = transported_rep_data(a);
    FullCentreResult fc = detail::assemble_full_centre(Convention::rep, ambient.view(),
                                                       std::move(per_degree), "full_centre");
    fc.evaluation = Mat(field, da, fc.centre.dim());
    for (size_t c = 0; c < fc.basis.size(); ++c)
        for (size_t i = 0; i < da; ++i)
            for (unsigned gg = 0; gg < g.n; ++gg)
                fc.evaluation.at(i, c) += fc.basis[c][i * g.n + gg];
    return fc;
}

// ---------------------------------------------------------------------------
// Condition (cp) and the universal property

inline Vec basis_of(const CentreObject& z, size_t i) {
    Vec v(z.dim(), Scalar::zero(z.field));
    v[i] = Scalar::one(z.field);
    return v;
}

/// zeta(z) a = a zeta(h^-1(z)) for all basis z and homogeneous a of degree h.
inline bool verify_cp_graded(const CentreObject& z, const Mat& zeta, const GradedAlgebra& a) {
    const Group& g = a.group();
    for (size_t col = 0; col < z.dim(); ++col) {
        Vec zz = zeta.column(col);
        for (size_t j = 0; j < a.dim(); ++j) {
            unsigned h = a.space.degree[j];
            Vec lhs = a.mul.mul(zz, a.basis_vec(j), a.field);
            Vec moved = zeta * (z.rho(g.inv(h)) * basis_of(z, col));
            Vec rhs = a.mul.mul(a.basis_vec(j), moved, a.field);
            if (lhs != rhs) return false;
        }
    }
    return true;
}

/// zeta(z) a = f(a) zeta(z) for z of degree f.
inline bool verify_cp_rep(const CentreObject& z, const Mat& zeta, const GAlgebra& a) {
    for (size_t col = 0; col < z.dim(); ++col) {
        Vec zz = zeta.column(col);
        unsigned f = z.space.degree[col];
        for (size_t j = 0; j < a.dim(); ++j) {
            Vec lhs = a.mul.mul(zz, a.basis_vec(j), a.field);
            Vec rhs = a.mul.mul(a.rho(f) * a.basis_vec(j), zz, a.field);
            if (lhs != rhs) return false;
        }
    }
    return true;
}

/// Zero nullspace of {psi : Z -> Z(A) morphism in Z(G), ev . psi = 0}.
inline bool unique_factorization_certified(const CentreObject& z, const FullCentreResult& fc) {
    const CentreObject& y = fc.centre.obj;
    FieldSpec field = z.field;
    std::vector<std::pair<size_t, size_t>> unknowns;
    for (size_t i = 0; i < y.dim(); ++i)
        for (size_t j = 0; j < z.dim(); ++j)
            if (y.space.degree[i] == z.space.degree[j]) unknowns.push_back({i, j});
    if (unknowns.empty()) return true;
    std::vector<Vec> rows;
    for (unsigned gen : generators(z.group())) {
        for (size_t i = 0; i < y.dim(); ++i)
            for (size_t j = 0; j < z.dim(); ++j) {
                Vec row(unknowns.size(), Scalar::zero(field));
                bool nz = false;
                for (size_t u = 0; u < unknowns.size(); ++u) {
                    auto [r, c] = unknowns[u];
                    Scalar coeff = Scalar::zero(field);
                    if (c == j) coeff += y.rho(gen).at(i, r);
                    if (r == i) coeff -= z.rho(gen).at(c, j);
                    if (!coeff.is_zero()) {
                        row[u] = coeff;
                        nz = true;
                    }
                }
                if (nz) rows.push_back(std::move(row));
            }
    }
    for (size_t r = 0; r < fc.evaluation.rows(); ++r)
        for (size_t j = 0; j < z.dim(); ++j) {
            Vec row(unknowns.size(), Scalar::zero(field));
            bool nz = false;
            for (size_t u = 0; u < unknowns.size(); ++u) {
                auto [ri, c] = unknowns[u];
                if (c != j) continue;
                const Scalar& e = fc.evaluation.at(r, ri);
                if (!e.is_zero()) {
                    row[u] = e;
                    nz = true;
                }
            }
            if (nz) rows.push_back(std::move(row));
        }
    if (rows.empty()) return false;
    return nullspace(Mat::from_rows(field, unknowns.size(), rows)).empty();
}

struct UniversalMapResult {
    Mat map; // Z -> Z(A), in centre coordinates
    Report report;
};

/// zbar(g) = zeta(g(z)), expressed in the solved centre.
inline UniversalMapResult universal_map_graded(const CentreObject& z, const Mat& zeta,
                                               const GradedAlgebra& a, const FullCentreResult& fc) {
    UniversalMapResult out;
    out.report.name = "universal_map";
    if (!verify_cp_graded(z, zeta, a))
        throw validation_error("universal_map: condition (cp) fails");
    const Group& g = a.group();
    const size_t da = a.dim();
    out.map = Mat(a.field, fc.centre.dim(), z.dim());
    bool expressed = true;
    for (size_t col = 0; col < z.dim(); ++col) {
        Vec amb(g.n * da, Scalar::zero(a.field));
        for (unsigned gg = 0; gg < g.n; ++gg) {
            Vec v = zeta * (z.rho(gg) * basis_of(z, col));
            for (size_t i = 0; i < da; ++i) amb[gg * da + i] = v[i];
        }
        auto global = express_in_centre(fc, z.space.degree[col], amb);
        if (!global) {
            expressed = false;
            break;
        }
        for (size_t i = 0; i < fc.centre.dim(); ++i) out.map.at(i, col) = (*global)[i];
    }
    out.report.add("factors_through_centre", expressed);
    if (!expressed) return out;
    out.report.add("morphism_in_ZG", is_morphism(z, fc.centre.obj, out.map));
    out.report.add("evaluation_recovers_zeta", fc.evaluation * out.map == zeta);
    out.report.add("uniqueness_zero_nullspace", unique_factorization_certified(z, fc));
    return out;
}

inline UniversalMapResult universal_map_rep(const CentreObject& z, const Mat& zeta,
                                            const GAlgebra& a, const FullCentreResult& fc) {
    UniversalMapResult out;
    out.report.name = "universal_map";
    if (!verify_cp_rep(z, zeta, a))
        throw validation_error("universal_map: condition (cp) fails");
    const Group& g = a.group;
    const size_t da = a.dim();
    out.map = Mat(a.field, fc.centre.dim(), z.dim());
    bool expressed = true;
    for (size_t col = 0; col < z.dim(); ++col) {
        unsigned f = z.space.degree[col];
        Vec v = zeta * basis_of(z, col);
        Vec amb(da * g.n, Scalar::zero(a.field));
        for (size_t i = 0; i < da; ++i) amb[i * g.n + f] = v[i];
        auto global = express_in_centre(fc, f, amb);
        if (!global) {
            expressed = false;
            break;
        }
        for (size_t i = 0; i < fc.centre.dim(); ++i) out.map.at(i, col) = (*global)[i];
    }
    out.report.add("factors_through_centre", expressed);
    if (!expressed) return out;
    out.report.add("morphism_in_ZG", is_morphism(z, fc.centre.obj, out.map));
    out.report.add("evaluation_recovers_zeta", fc.evaluation * out.map == zeta);
    out.report.add("uniqueness_zero_nullspace", unique_factorization_certified(z, fc));
    return out;
}

// ---------------------------------------------------------------------------
// Isomorphism verification for algebras in Z(G)

inline Report verify_iso_centre_algebras(const Mat& m, const CentreAlgebra& src,
                                         const CentreAlgebra& dst) {
    Report rep{"iso", {}};
    if (m.rows() != dst.dim() || m.cols() != src.dim()) {
        rep.add("shape", false, "map shape mismatch");
        return rep;
    }
    rep.add("dimensions_equal", src.dim() == dst.dim());
    rep.add("morphism_in_ZG", is_morphism(src.obj, dst.obj, m));
    rep.add("unital", m * src.unit == dst.unit);
    bool mult = true;
    std::string mw;
    for (size_t i = 0; i < src.dim() && mult; ++i)
        for (size_t j = 0; j < src.dim(); ++j) {
            Vec lhs = m * src.mul.mul(src.basis_vec(i), src.basis_vec(j), src.field());
            Vec rhs = dst.mul.mul(m * src.basis_vec(i), m * src.basis_vec(j), dst.field());
            if (lhs != rhs) {
                mult = false;
                mw = "pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
                break;
            }
        }
    rep.add("multiplicative", mult, mw);
    rep.add("invertible", src.dim() == dst.dim() && rank(m) == src.dim());
    return rep;
}

/// Structure-level equality: same dims, degrees, unit, products, actions.
inline bool centre_algebras_identical(const CentreAlgebra& a, const CentreAlgebra& b,
                                      std::string* why = nullptr) {
    auto fail = [&](const std::string& s) {
        if (why) *why = s;
        return false;
    };
    if (a.dim() != b.dim()) return fail("dimension mismatch");
    if (a.obj.space.degree != b.obj.space.degree) return fail("degree mismatch");
    if (a.unit != b.unit) return fail("unit mismatch");
    for (unsigned g = 0; g < a.group().n; ++g)
        if (a.obj.rho(g) != b.obj.rho(g)) return fail("action mismatch at " + a.group().names[g]);
    for (size_t i = 0; i < a.dim(); ++i)
        for (size_t j = 0; j < a.dim(); ++j)
            if (a.mul.mul(a.basis_vec(i), a.basis_vec(j), a.field()) !=
                b.mul.mul(b.basis_vec(i), b.basis_vec(j), b.field()))
                return fail("structure constants differ at (" + std::to_string(i) + "," +
                            std::to_string(j) + ")");
    return true;
}

// ---------------------------------------------------------------------------
// Theorem: Z(A) = C_l(R(A)) under the matched convention.

inline Report verify_theorem_fullcentre_graded(const GradedAlgebra& a,
                                               Convention conv = Convention::graded,
                                               size_t bound = 4096) {
    Report rep{"theorem_fullcentre_graded[" + convention_name(conv) + "]", {}};
    FullCentreResult fc = full_centre_graded(a, bound);
    TransportedAlgebra b = transported_graded_data(a);
    const Group& g = a.group();
    bool subspaces_equal = true;
    std::string w;
    try {
        SubCentreResult lc = left_centre(b.view(), conv);
        for (unsigned f = 0; f < g.n && subspaces_equal; ++f)
            if (fc.per_degree[f] != lc.per_degree[f]) {
                subspaces_equal = false;
                w = "solution spaces differ in degree " + g.names[f] + " (dim " +
                    std::to_string(fc.per_degree[f].size()) + " vs " +
                    std::to_string(lc.per_degree[f].size()) + ")";
            }
        rep.add("subspaces_equal_per_degree", subspaces_equal, w);
        if (subspaces_equal) {
            std::string why;
            bool same = centre_algebras_identical(fc.centre, lc.algebra, &why);
            rep.add("algebra_data_identical", same, why);
        }
    } catch (const validation_error& e) {
        rep.add("left_centre_construction", false, e.what());
    }
    return rep;
}

inline Report verify_theorem_fullcentre_rep(const GAlgebra& a, Convention conv = Convention::rep,
                                            size_t bound = 4096) {
    Report rep{"theorem_fullcentre_rep[" + convention_name(conv) + "]", {}};
    FullCentreResult fc = full_centre_repg(a, bound);
    TransportedAlgebra b = transported_rep_data(a);
    const Group& g = a.group;
    bool subspaces_equal = true;
    std::string w;
    try {
        SubCentreResult lc = left_centre(b.view(), conv);
        for (unsigned f = 0; f < g.n && subspaces_equal; ++f)
            if (fc.per_degree[f] != lc.per_degree[f]) {
                subspaces_equal = false;
                w = "solution spaces differ in degree " + g.names[f] + " (dim " +
                    std::to_string(fc.per_degree[f].size()) + " vs " +
                    std::to_string(lc.per_degree[f].size()) + ")";
            }
        rep.add("subspaces_equal_per_degree", subspaces_equal, w);
        if (subspaces_equal) {
            std::string why;
            bool same = centre_algebras_identical(fc.centre, lc.algebra, &why);
            rep.add("algebra_data_identical", same, why);
        }
    } catch (const validation_error& e) {
        rep.add("left_centre_construction", false, e.what());
    }
    return rep;
}

} // namespace centra

#include "centra/fullcentre_extra.hpp"
