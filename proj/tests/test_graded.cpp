#include <catch2/catch_amalgamated.hpp>

#include "centra/cohomology.hpp"
#include "centra/graded.hpp"
#include "centra/group.hpp"

using namespace centra;

namespace {
Cocycle2 jk_cocycle(const Group& v4) {
    std::vector<unsigned> nt;
    for (unsigned x = 0; x < 4; ++x)
        if (x != v4.identity) nt.push_back(x);
    auto exps = [&](unsigned x) -> std::pair<int, int> {
        if (x == v4.identity) return {0, 0};
        if (x == nt[0]) return {1, 0};
        if (x == nt[1]) return {0, 1};
        return {1, 1};
    };
    std::vector<int> table(16, 0);
    for (unsigned x = 0; x < 4; ++x)
        for (unsigned y = 0; y < 4; ++y)
            table[x * 4 + y] = (exps(x).second * exps(y).first) % 2;
    return check_cocycle(v4, 2, std::move(table), false);
}
} // namespace

TEST_CASE("group algebra and skew algebras") {
    for (const char* name : {"C4", "S3", "D4"}) {
        const Group& g = catalog_group(name);
        GradedAlgebra kg = group_algebra(g, FieldSpec::rationals());
        REQUIRE(check_graded_algebra(kg).pass());
        REQUIRE(kg.dim() == g.n);
        for (size_t i = 0; i < kg.dim(); ++i) REQUIRE(kg.space.degree[i] == i);
    }
    // skew algebra of C2xC2 with the j*k cocycle: e_a e_b = -e_b e_a
    const Group& v4 = catalog_group("C2xC2");
    GradedAlgebra a = skew_group_algebra(v4, full_subgroup(v4), jk_cocycle(v4),
                                         FieldSpec::cyclotomic(2));
    REQUIRE(check_graded_algebra(a).pass());
    REQUIRE(a.dim() == 4);
    std::vector<unsigned> nt;
    for (unsigned x = 0; x < 4; ++x)
        if (x != v4.identity) nt.push_back(x);
    Vec ea = a.basis_vec(nt[0]), eb = a.basis_vec(nt[1]);
    Vec ab = a.mul.mul(ea, eb, a.field);
    Vec ba = a.mul.mul(eb, ea, a.field);
    REQUIRE(ab == vec_scale(-Scalar::one(a.field), ba));
    REQUIRE(ab != ba);
    // zeroing one structure constant fails the report with a witness
    GradedAlgebra broken = a;
    broken.mul.entry[nt[0] * 4 + nt[1]].clear();
    Report r = check_graded_algebra(broken);
    REQUIRE_FALSE(r.pass());
    // trivial subgroup gives the unit algebra
    GradedAlgebra unit = unit_algebra(v4, FieldSpec::rationals());
    REQUIRE(unit.dim() == 1);
    REQUIRE(unit.space.degree[0] == v4.identity);
    // H = C2 with zero cocycle inside C2 is k[C2]
    const Group& c2 = catalog_group("C2");
    GradedAlgebra kc2 = skew_group_algebra(c2, full_subgroup(c2), zero_cocycle(c2, 1),
                                           FieldSpec::rationals());
    REQUIRE(kc2.dim() == 2);
    REQUIRE(check_graded_algebra(kc2).pass());
    // cocycle/subgroup mismatch
    REQUIRE_THROWS_AS(
        skew_group_algebra(v4, make_subgroup(v4, {v4.identity, nt[0]}), jk_cocycle(v4),
                           FieldSpec::cyclotomic(2)),
        validation_error);
}

TEST_CASE("degree additivity is quantified over all pairs") {
    const Group& s3 = catalog_group("S3");
    GradedAlgebra kg = group_algebra(s3, FieldSpec::rationals());
    for (size_t i = 0; i < kg.dim(); ++i)
        for (size_t j = 0; j < kg.dim(); ++j)
            for (const auto& [k, c] : kg.mul.at(i, j))
                REQUIRE(kg.space.degree[k] ==
                        s3.mul(kg.space.degree[i], kg.space.degree[j]));
}

TEST_CASE("matrix amplification") {
    const Group& s3 = catalog_group("S3");
    FieldSpec q = FieldSpec::rationals();
    GradedAlgebra a = group_algebra(s3, q);
    // W with a single degree-e vector reproduces A
    GradedSpace w1 = make_graded_space(s3, {"w"}, {s3.identity});
    GradedAlgebra amp1 = matrix_amplification(a, w1);
    REQUIRE(amp1.dim() == a.dim());
    REQUIRE(amp1.space.degree == a.space.degree);
    for (size_t i = 0; i < a.dim(); ++i)
        for (size_t j = 0; j < a.dim(); ++j)
            REQUIRE(amp1.mul.mul(amp1.basis_vec(i), amp1.basis_vec(j), q) ==
                    a.mul.mul(a.basis_vec(i), a.basis_vec(j), q));
    // two degree-e vectors on A = k: the 2x2 matrix algebra
    GradedAlgebra unit = unit_algebra(s3, q);
    GradedSpace w2 = make_graded_space(s3, {"w0", "w1"}, {s3.identity, s3.identity});
    GradedAlgebra m2 = matrix_amplification(unit, w2);
    REQUIRE(m2.dim() == 4);
    REQUIRE(check_graded_algebra(m2).pass());
    for (unsigned d : m2.space.degree) REQUIRE(d == s3.identity);
    // degrees occurring in End(W) for W of degrees (e, g)
    unsigned g3 = 0;
    for (unsigned x = 0; x < s3.n; ++x)
        if (s3.element_order(x) == 3) g3 = x;
    GradedSpace w3 = make_graded_space(s3, {"w0", "w1"}, {s3.identity, g3});
    GradedAlgebra m3 = matrix_amplification(unit, w3);
    std::set<unsigned> degs(m3.space.degree.begin(), m3.space.degree.end());
    REQUIRE(degs == std::set<unsigned>{s3.identity, g3, s3.inv(g3)});
    // dimension formula
    REQUIRE(matrix_amplification(a, w3).dim() == w3.dim() * w3.dim() * a.dim());
    REQUIRE(check_graded_algebra(matrix_amplification(a, w3)).pass());
    REQUIRE_THROWS_AS(matrix_amplification(a, make_graded_space(s3, {}, {})), validation_error);
}

TEST_CASE("separability") {
    const Group& c2 = catalog_group("C2");
    FieldSpec q = FieldSpec::rationals();
    REQUIRE(separability_check(unit_algebra(c2, q)).nondegenerate);
    // k[x]/x^2 in degree e: Gram [[2,0],[0,0]], radical spanned by x
    GradedAlgebra dual;
    dual.field = q;
    dual.space = make_graded_space(c2, {"1", "x"}, {c2.identity, c2.identity});
    dual.mul = MulTable::zero(2);
    dual.mul.set(0, 0, 0, Scalar::one(q));
    dual.mul.set(0, 1, 1, Scalar::one(q));
    dual.mul.set(1, 0, 1, Scalar::one(q));
    dual.unit = {Scalar::one(q), Scalar::zero(q)};
    REQUIRE(check_graded_algebra(dual).pass());
    SeparabilityResult r = separability_check(dual);
    REQUIRE_FALSE(r.nondegenerate);
    REQUIRE(r.gram.at(0, 0) == Scalar::of(q, 2));
    REQUIRE(r.gram.at(0, 1) == Scalar::zero(q));
    REQUIRE(r.gram.at(1, 1) == Scalar::zero(q));
    REQUIRE(r.radical_witness.has_value());
    Vec x{Scalar::zero(q), Scalar::one(q)};
    REQUIRE(*r.radical_witness == x);
    // k[C2] over the rationals: Gram = diag(2,2)
    GradedAlgebra kc2 = group_algebra(c2, q);
    SeparabilityResult r2 = separability_check(kc2);
    REQUIRE(r2.nondegenerate);
    REQUIRE(r2.gram.at(0, 0) == Scalar::of(q, 2));
    REQUIRE(r2.gram.at(1, 1) == Scalar::of(q, 2));
    REQUIRE(r2.gram.at(0, 1) == Scalar::zero(q));
    // skew algebras of catalog cases are separable in characteristic zero
    for (const char* name : {"C4", "S3", "D4", "Q8"}) {
        const Group& g = catalog_group(name);
        for (const Subgroup& h : subgroups(g)) {
            SubgroupGroup hg = subgroup_group(g, h);
            for (const Cocycle2& gamma :
                 cocycle_representatives(hg.group, static_cast<unsigned>(h.order()))) {
                GradedAlgebra a =
                    skew_group_algebra(g, h, gamma, FieldSpec::cyclotomic(gamma.modulus));
                REQUIRE(separability_check(a).nondegenerate);
            }
        }
    }
}

TEST_CASE("graded homomorphism checker") {
    const Group& s3 = catalog_group("S3");
    FieldSpec q = FieldSpec::rationals();
    GradedAlgebra a = group_algebra(s3, q);
    REQUIRE(check_graded_hom(Mat::identity(q, a.dim()), a, a).pass());
    Report zero = check_graded_hom(Mat(q, a.dim(), a.dim()), a, a);
    REQUIRE_FALSE(zero.pass()); // fails the unit check
    bool unit_failed = false;
    for (auto& it : zero.items)
        if (it.check == "unit" && !it.pass) unit_failed = true;
    REQUIRE(unit_failed);
}
