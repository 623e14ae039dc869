#include <catch2/catch_amalgamated.hpp>

#include "centra/fullcentre.hpp"
#include "centra/matrixsuite.hpp"

using namespace centra;

namespace {
FieldSpec Q = FieldSpec::rationals();

Subgroup alternating_3(const Group& s3) {
    std::vector<unsigned> a3{s3.identity};
    for (unsigned x = 0; x < s3.n; ++x)
        if (s3.element_order(x) == 3) a3.push_back(x);
    return make_subgroup(s3, a3);
}
} // namespace

TEST_CASE("full centre of the unit algebra, graded") {
    const Group& s3 = catalog_group("S3");
    FullCentreResult fc = full_centre_graded(unit_algebra(s3, Q));
    REQUIRE(fc.centre.dim() == s3.n);
    for (unsigned d : fc.centre.obj.space.degree) REQUIRE(d == s3.identity);
    REQUIRE(is_commutative(fc.centre));
    REQUIRE(check_centre_algebra(fc.centre).pass());
}

TEST_CASE("full centre of k[S3]") {
    const Group& s3 = catalog_group("S3");
    GradedAlgebra a = group_algebra(s3, Q);
    FullCentreResult fc = full_centre_graded(a);
    REQUIRE(fc.centre.dim() == 6);
    // the degree-f component is 1-dimensional for every f
    for (unsigned f = 0; f < s3.n; ++f) REQUIRE(fc.per_degree[f].size() == 1);
    // closed form: z is determined by z(e) via c_h(y) = c_e(h^-1 y h);
    // the degree-f solution has z(h) supported at h f h^-1
    for (unsigned f = 0; f < s3.n; ++f) {
        const Vec& z = fc.per_degree[f][0];
        for (unsigned h = 0; h < s3.n; ++h)
            for (unsigned y = 0; y < s3.n; ++y) {
                const Scalar& coeff = z[h * s3.n + y];
                if (y == s3.conj(h, f)) {
                    REQUIRE_FALSE(coeff.is_zero());
                    REQUIRE(coeff == z[s3.identity * s3.n + f]); // eta constant for gamma = 0
                } else {
                    REQUIRE(coeff.is_zero());
                }
            }
    }
}

TEST_CASE("full centre of a matrix algebra, graded") {
    const Group& s3 = catalog_group("S3");
    GradedSpace w = make_graded_space(s3, {"w0", "w1"}, {s3.identity, s3.identity});
    GradedAlgebra endw = matrix_amplification(unit_algebra(s3, Q), w);
    FullCentreResult fc = full_centre_graded(endw);
    REQUIRE(fc.centre.dim() == s3.n); // ordinary centre is k, then functions on G
    for (unsigned d : fc.centre.obj.space.degree) REQUIRE(d == s3.identity);
}

TEST_CASE("condition (cp) and the universal property, graded") {
    const Group& s3 = catalog_group("S3");
    GradedAlgebra a = group_algebra(s3, Q);
    FullCentreResult fc = full_centre_graded(a);
    // (I, unit) satisfies (cp)
    CentreObject i = unit_object(s3, Q);
    Mat unit_map = Mat::from_columns(Q, a.dim(), {a.unit});
    REQUIRE(verify_cp_graded(i, unit_map, a));
    // (Z(A), evaluation) satisfies (cp)
    REQUIRE(verify_cp_graded(fc.centre.obj, fc.evaluation, a));
    // evaluation composed with a non-central projection fails (cp)
    Mat bad = fc.evaluation;
    for (size_t c = 0; c < bad.cols(); ++c)
        for (size_t r = 1; r < bad.rows(); ++r) bad.at(r, c) = Scalar::zero(Q);
    REQUIRE_FALSE(verify_cp_graded(fc.centre.obj, bad, a));
    // universal map for (Z(A), ev) is the identity
    UniversalMapResult u = universal_map_graded(fc.centre.obj, fc.evaluation, a, fc);
    REQUIRE(u.report.pass());
    REQUIRE(u.map == Mat::identity(Q, fc.centre.dim()));
    // universal map for (I, unit) lands on the unit of Z(A)
    UniversalMapResult ui = universal_map_graded(i, unit_map, a, fc);
    REQUIRE(ui.report.pass());
    REQUIRE(ui.map.column(0) == fc.centre.unit);
    // fold map on Z(A) (+) Z(A)
    CentreObject dbl = direct_sum(fc.centre.obj, fc.centre.obj);
    Mat zeta2(Q, a.dim(), dbl.dim());
    for (size_t r = 0; r < a.dim(); ++r)
        for (size_t c = 0; c < fc.centre.dim(); ++c) {
            zeta2.at(r, c) = fc.evaluation.at(r, c);
            zeta2.at(r, fc.centre.dim() + c) = fc.evaluation.at(r, c);
        }
    UniversalMapResult uf = universal_map_graded(dbl, zeta2, a, fc);
    REQUIRE(uf.report.pass());
    for (size_t c = 0; c < fc.centre.dim(); ++c) {
        REQUIRE(uf.map.column(c) == Mat::identity(Q, fc.centre.dim()).column(c));
        REQUIRE(uf.map.column(fc.centre.dim() + c) ==
                Mat::identity(Q, fc.centre.dim()).column(c));
    }
    // a pair violating (cp) is rejected
    REQUIRE_THROWS_AS(universal_map_graded(fc.centre.obj, bad, a, fc), validation_error);
}

TEST_CASE("full centre in Rep(G)") {
    // A = k with trivial action: Z_g = k for all g
    const Group& c4 = catalog_group("C4");
    FullCentreResult fc = full_centre_repg(trivial_g_algebra(c4, Q));
    REQUIRE(fc.centre.dim() == 4);
    for (unsigned g = 0; g < 4; ++g) REQUIRE(fc.per_degree[g].size() == 1);
    // Z_e(A) is the ordinary centre
    const Group& v4 = catalog_group("C2xC2");
    FieldSpec f2 = FieldSpec::cyclotomic(2);
    ProjectiveRep pr = pauli_rep(v4, f2);
    GAlgebra endv = end_algebra_of_rep(pr);
    FullCentreResult fe = full_centre_repg(endv);
    REQUIRE(fe.per_degree[v4.identity].size() == 1); // centre of End(V) = k
    // each twisted centralizer of the Pauli algebra is 1-dimensional
    for (unsigned g = 0; g < 4; ++g) REQUIRE(fe.per_degree[g].size() == 1);
    REQUIRE(fe.centre.dim() == 4);
    REQUIRE(is_commutative(fe.centre));
    // (cp) and universal factorization in the rep realization
    REQUIRE(verify_cp_rep(fe.centre.obj, fe.evaluation, endv));
    UniversalMapResult u = universal_map_rep(fe.centre.obj, fe.evaluation, endv, fe);
    REQUIRE(u.report.pass());
    REQUIRE(u.map == Mat::identity(f2, 4));
}

TEST_CASE("transported algebras and beta as homomorphism") {
    const Group& c4 = catalog_group("C4");
    // graded: functions with pointwise product; beta = evaluation at e
    GradedAlgebra a = group_algebra(c4, Q);
    CentreAlgebra b = transported_algebra_graded(a);
    REQUIRE(check_centre_algebra(b).pass());
    Mat beta = beta_graded(c4, Q, a.space);
    REQUIRE(check_graded_hom(beta, b.forget(), a).pass());
    // the unit of R(A) is the alpha-image of the unit: the constant function
    for (unsigned g = 0; g < 4; ++g)
        for (size_t i = 0; i < a.dim(); ++i)
            REQUIRE(b.unit[g * a.dim() + i] == a.unit[i]);
    // rep: (a (x) e_g)(b (x) e_h) = ab (x) e_{gh}
    GAlgebra ga = conjugation_group_algebra(c4, Q);
    CentreAlgebra br = transported_algebra_rep(ga);
    REQUIRE(check_centre_algebra(br).pass());
    for (size_t i = 0; i < ga.dim(); ++i)
        for (unsigned x = 0; x < 4; ++x)
            for (size_t j = 0; j < ga.dim(); ++j)
                for (unsigned y = 0; y < 4; ++y) {
                    Vec prod = br.mul.mul(br.basis_vec(i * 4 + x), br.basis_vec(j * 4 + y), Q);
                    Vec expect(br.dim(), Scalar::zero(Q));
                    Vec inA = ga.mul.mul(ga.basis_vec(i), ga.basis_vec(j), Q);
                    for (size_t k = 0; k < ga.dim(); ++k)
                        expect[k * 4 + c4.mul(x, y)] = inA[k];
                    REQUIRE(prod == expect);
                }
    // beta_rep is an algebra homomorphism FR(A) -> A
    Mat betar = beta_rep(RepObject{Q, c4, ga.labels, ga.action});
    for (size_t i = 0; i < br.dim(); ++i)
        for (size_t j = 0; j < br.dim(); ++j) {
            Vec lhs = betar * br.mul.mul(br.basis_vec(i), br.basis_vec(j), Q);
            Vec rhs = ga.mul.mul(betar * br.basis_vec(i), betar * br.basis_vec(j), Q);
            REQUIRE(lhs == rhs);
        }
}

TEST_CASE("theorem holds matched and fails mismatched") {
    const Group& s3 = catalog_group("S3");
    // unit algebra: both sides are the regular centre object, dim |G|
    for (const char* name : {"C2", "C3", "C4", "C2xC2", "S3"}) {
        Report r = verify_theorem_fullcentre_graded(unit_algebra(catalog_group(name), Q));
        REQUIRE(r.pass());
    }
    // negative control
    Report neg = run_convention_negative_control();
    REQUIRE(neg.pass());
    // rep realization on an induced algebra
    Subgroup a3 = alternating_3(s3);
    SubgroupGroup hg = subgroup_group(s3, a3);
    InducedAlgebra a = make_A_H_gamma(s3, a3, trivial_rep(hg.group, Q));
    REQUIRE(verify_theorem_fullcentre_rep(a.algebra, Convention::rep).pass());
}

TEST_CASE("adjunction data for R(I)") {
    const Group& c4 = catalog_group("C4");
    // R(I) in the graded realization is the regular centre object
    GradedSpace ispace = make_graded_space(c4, {"1"}, {c4.identity});
    CentreObject ri = R_graded(c4, Q, ispace);
    REQUIRE(ri.dim() == 4);
    for (unsigned d : ri.space.degree) REQUIRE(d == c4.identity);
    REQUIRE(check_centre_object(ri).pass());
    // quick randomized adjunction rounds for both realizations
    REQUIRE(check_adjunction(c4, FieldSpec::cyclotomic(4), Convention::graded, 3, 5).pass());
    REQUIRE(check_adjunction(c4, FieldSpec::cyclotomic(4), Convention::rep, 3, 5).pass());
}

TEST_CASE("explicit fcgr witness") {
    const Group& s3 = catalog_group("S3");
    // gamma = 0 on an abelian subgroup: eta is identically 1
    Subgroup a3 = alternating_3(s3);
    SubgroupGroup hg = subgroup_group(s3, a3);
    FcgrData d = verify_prop_fcgr(s3, a3, zero_cocycle(hg.group, 3), FieldSpec::cyclotomic(3));
    REQUIRE(d.report.pass());
    REQUIRE(d.fc.centre.dim() == 6);
    // D4 with the nontrivial Klein cocycle
    const Group& d4 = catalog_group("D4");
    Subgroup k = make_subgroup(
        d4, {d4.identity, d4.index_of("r2"), d4.index_of("s"), d4.index_of("r2s")});
    SubgroupGroup kg = subgroup_group(d4, k);
    const Cocycle2* nontrivial = nullptr;
    auto reps = cocycle_representatives(kg.group, 2);
    for (const Cocycle2& c : reps)
        if (!is_coboundary_kstar(c)) nontrivial = &c;
    REQUIRE(nontrivial != nullptr);
    FcgrData d2 = verify_prop_fcgr(d4, k, *nontrivial, FieldSpec::cyclotomic(2));
    REQUIRE(d2.report.pass());
    REQUIRE(d2.fc.centre.dim() == 8);
}

TEST_CASE("classification") {
    const Group& s3 = catalog_group("S3");
    // classify(A(H,H,gamma)) round-trips on make_A outputs
    MakeAData model = make_A_full(s3, Q, alternating_3(s3),
                                  zero_cocycle(subgroup_group(s3, alternating_3(s3)).group, 1));
    Classification k = classify_centre_algebra(model.algebra);
    REQUIRE(k.report.pass());
    REQUIRE(k.h.order() == 3);
    REQUIRE(k.f == k.h);
    // classify(Z(k[H,gamma])) recovers (H, H, [gamma])
    GradedAlgebra a = skew_group_algebra(s3, alternating_3(s3),
                                         zero_cocycle(subgroup_group(s3, alternating_3(s3)).group, 3),
                                         FieldSpec::cyclotomic(3));
    FullCentreResult fc = full_centre_graded(a);
    Classification kz = classify_centre_algebra(fc.centre);
    REQUIRE(kz.report.pass());
    REQUIRE(kz.h.order() == 3);
    REQUIRE(kz.f == kz.h);
    REQUIRE(is_coboundary_kstar(kz.gamma).has_value()); // trivial class
    // functions on G with the translation action classify as ({e},{e},1)
    FullCentreResult fi = full_centre_graded(unit_algebra(s3, Q));
    Classification ki = classify_centre_algebra(fi.centre);
    REQUIRE(ki.report.pass());
    REQUIRE(ki.h.order() == 1);
    REQUIRE(ki.f.order() == 1);
    // decomposable algebras are rejected: A (+) A has a non-transitive orbit
    CentreAlgebra dblA;
    {
        const CentreAlgebra& c = model.algebra;
        dblA.obj = direct_sum(c.obj, c.obj);
        dblA.mul = MulTable::zero(2 * c.dim());
        for (size_t i = 0; i < c.dim(); ++i)
            for (size_t j = 0; j < c.dim(); ++j)
                for (const auto& [kk, s] : c.mul.at(i, j)) {
                    dblA.mul.set(i, j, kk, s);
                    dblA.mul.set(c.dim() + i, c.dim() + j, c.dim() + kk, s);
                }
        dblA.unit = c.unit;
        dblA.unit.insert(dblA.unit.end(), c.unit.begin(), c.unit.end());
    }
    REQUIRE_THROWS_WITH(classify_centre_algebra(dblA),
                        Catch::Matchers::ContainsSubstring("decomposable"));
}

TEST_CASE("morita verification") {
    const Group& s3 = catalog_group("S3");
    // trivial witness W = single degree-e vector
    GradedAlgebra a = group_algebra(s3, Q);
    GradedSpace w1 = make_graded_space(s3, {"w"}, {s3.identity});
    REQUIRE(verify_morita(a, w1).pass());
    // mixed degrees
    unsigned t = 0;
    for (unsigned x = 0; x < s3.n; ++x)
        if (s3.element_order(x) == 2) t = x;
    GradedSpace w2 = make_graded_space(s3, {"w0", "w1"}, {s3.identity, t});
    Report r = verify_morita(a, w2);
    REQUIRE(r.pass());
    // classifier fallback agrees on a small case
    GradedAlgebra amp = matrix_amplification(a, w2);
    FullCentreResult f1 = full_centre_graded(a);
    FullCentreResult f2 = full_centre_graded(amp);
    REQUIRE(morita_compare_by_classification(f1.centre, f2.centre).pass());
}
