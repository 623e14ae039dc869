#pragma once

// Randomized structural suites over exact arithmetic: half-braiding
// multiplicativity and naturality, hexagons for both conventions, the
// mirror identity, snake identities, ribbon coherence and twist
// self-duality, trace cyclicity and multiplicativity.

#include "centra/centre.hpp"
#include "centra/fullcentre.hpp"
#include "centra/random.hpp"

namespace centra {

/// mu . c_{C,C} = mu as matrices, under the chosen convention.
inline bool is_commutative_via_braiding(const CentreAlgebra& c, Convention conv) {
    const size_t d = c.dim();
    Mat mul(c.field(), d, d * d);
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j)
            for (const auto& [k, s] : c.mul.at(i, j)) mul.at(k, i * d + j) += s;
    return mul * braiding(c.obj, c.obj, conv) == mul;
}

inline void check_axioms_once(const Group& g, FieldSpec field, Rng& rng, Report& rep) {
    CentreObject x = random_centre_object(g, field, rng, 4);
    CentreObject y = random_centre_object(g, field, rng, 4);
    CentreObject z = random_centre_object(g, field, rng, 3);

    // half-braiding multiplicativity, graded realization
    {
        GradedSpace u = random_graded_space(g, rng, 3);
        GradedSpace v = random_graded_space(g, rng, 2);
        GradedSpace uv = tensor_graded_space(u, v);
        Mat lhs = half_braiding_graded(x, uv);
        Mat rhs = kron(Mat::identity(field, u.dim()), half_braiding_graded(x, v)) *
                  kron(half_braiding_graded(x, u), Mat::identity(field, v.dim()));
        rep.add("half_braiding_multiplicative_graded", lhs == rhs);
        // naturality in U: (t (x) 1) z_U = z_U' (1 (x) t)
        GradedSpace u2 = random_graded_space(g, rng, 3);
        Mat t = random_graded_map(u, u2, field, rng);
        rep.add("half_braiding_natural_graded",
                kron(t, Mat::identity(field, x.dim())) * half_braiding_graded(x, u) ==
                    half_braiding_graded(x, u2) * kron(Mat::identity(field, x.dim()), t));
    }
    // half-braiding multiplicativity, rep realization
    {
        RepObject u = random_rep_object(g, field, rng, 3);
        RepObject v = random_rep_object(g, field, rng, 2);
        RepObject uv = tensor_rep_object(u, v);
        Mat lhs = half_braiding_rep(x, uv);
        Mat rhs = kron(Mat::identity(field, u.dim()), half_braiding_rep(x, v)) *
                  kron(half_braiding_rep(x, u), Mat::identity(field, v.dim()));
        rep.add("half_braiding_multiplicative_rep", lhs == rhs);
        RepObject u2 = random_rep_object(g, field, rng, 3);
        Mat t = random_rep_map(u, u2, rng);
        rep.add("half_braiding_natural_rep",
                kron(t, Mat::identity(field, x.dim())) * half_braiding_rep(x, u) ==
                    half_braiding_rep(x, u2) * kron(Mat::identity(field, x.dim()), t));
    }
    // hexagons, both conventions
    for (Convention conv : {Convention::graded, Convention::rep}) {
        CentreObject yz = tensor_object(y, z);
        Mat h1 = braiding(x, yz, conv);
        Mat h1r = kron(Mat::identity(field, y.dim()), braiding(x, z, conv)) *
                  kron(braiding(x, y, conv), Mat::identity(field, z.dim()));
        rep.add("hexagon1_" + convention_name(conv), h1 == h1r);
        CentreObject xy = tensor_object(x, y);
        Mat h2 = braiding(xy, z, conv);
        Mat h2r = kron(braiding(x, z, conv), Mat::identity(field, y.dim())) *
                  kron(Mat::identity(field, x.dim()), braiding(y, z, conv));
        rep.add("hexagon2_" + convention_name(conv), h2 == h2r);
    }
    // mirror identity
    rep.add("mirror_identity",
            braiding(x, y, Convention::graded) * braiding(y, x, Convention::rep) ==
                Mat::identity(field, y.dim() * x.dim()));
    // duality: snake identities, equivariance of ev/coev
    {
        DualData d = dual_object(x);
        size_t n = x.dim();
        Mat s1 = kron(Mat::identity(field, n), d.ev) * kron(d.coev, Mat::identity(field, n));
        Mat s2 = kron(d.ev, Mat::identity(field, n)) * kron(Mat::identity(field, n), d.coev);
        rep.add("snake_first", s1 == Mat::identity(field, n));
        rep.add("snake_second", s2 == Mat::identity(field, n));
        CentreObject dx_x = tensor_object(d.dual, x);
        CentreObject x_dx = tensor_object(x, d.dual);
        rep.add("ev_is_morphism", is_morphism(dx_x, unit_object(g, field), d.ev));
        rep.add("coev_is_morphism", is_morphism(unit_object(g, field), x_dx, d.coev));
        // twist self-duality
        rep.add("twist_self_dual", ribbon_twist(d.dual) == ribbon_twist(x).transpose());
    }
    // ribbon coherence and naturality of the twist
    {
        CentreObject xy = tensor_object(x, y);
        Mat coh = braiding(y, x, Convention::rep) * braiding(x, y, Convention::rep) *
                  kron(ribbon_twist(x), ribbon_twist(y));
        rep.add("ribbon_coherence", ribbon_twist(xy) == coh);
        Mat t = random_morphism(x, y, rng);
        rep.add("twist_natural", ribbon_twist(y) * t == t * ribbon_twist(x));
    }
    // trace
    {
        Mat a = random_morphism(x, y, rng);
        Mat b = random_morphism(y, x, rng);
        rep.add("trace_cyclic", trace_endo(y, a * b) == trace_endo(x, b * a));
        Mat fe = random_morphism(x, x, rng);
        Mat ge = random_morphism(y, y, rng);
        CentreObject xy = tensor_object(x, y);
        rep.add("trace_multiplicative",
                trace_endo(xy, kron(fe, ge)) == trace_endo(x, fe) * trace_endo(y, ge));
        CentreObject i = unit_object(g, field);
        rep.add("trace_of_unit", trace_endo(i, Mat::identity(field, 1)) == Scalar::one(field));
    }
}

/// Randomized structural suite; stops at the first failing round.
inline Report check_structural_axioms(const Group& g, FieldSpec field, std::uint64_t seed,
                                      int instances) {
    Report rep{"axioms", {}};
    Rng rng(seed);
    for (int t = 0; t < instances; ++t) {
        Report round{"round" + std::to_string(t), {}};
        check_axioms_once(g, field, rng, round);
        if (!round.pass()) {
            rep.merge(round);
            return rep;
        }
    }
    rep.add("all_rounds", true, std::to_string(instances) + " rounds");
    return rep;
}

} // namespace centra
