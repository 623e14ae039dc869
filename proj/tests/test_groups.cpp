#include <catch2/catch_amalgamated.hpp>

#include "centra/group.hpp"
#include "support/oracles.hpp"

using namespace centra;

TEST_CASE("validate_group basics") {
    Group c2 = validate_group({0, 1, 1, 0}, 0, {"e", "a"});
    REQUIRE(c2.n == 2);
    REQUIRE(c2.inv(1) == 1);
    // broken associativity carries a witness triple
    // table of order 3 that is a latin square but not associative
    std::vector<unsigned> bad{0, 1, 2, 3, 4, //
                              1, 0, 3, 4, 2, //
                              2, 4, 0, 1, 3, //
                              3, 2, 4, 0, 1, //
                              4, 3, 1, 2, 0};
    REQUIRE_THROWS_WITH(validate_group(bad, 0, {}),
                        Catch::Matchers::ContainsSubstring("associativity"));
    // non latin square
    REQUIRE_THROWS_WITH(validate_group({0, 0, 1, 1}, 0, {}),
                        Catch::Matchers::ContainsSubstring("latin"));
    // wrong identity
    REQUIRE_THROWS_AS(validate_group({0, 1, 1, 0}, 1, {}), validation_error);
}

TEST_CASE("catalog") {
    std::vector<std::pair<std::string, unsigned>> expect = {
        {"C2", 2},  {"C3", 3},  {"C4", 4},        {"C2xC2", 4}, {"S3", 6},
        {"D4", 8},  {"Q8", 8},  {"C2xC2xC2", 8},  {"A4", 12},   {"S4", 24}};
    for (auto& [name, order] : expect) REQUIRE(catalog_group(name).n == order);
    // S3 built from transposition generators via permutation composition
    const Group& s3 = catalog_group("S3");
    REQUIRE(s3.n == 6);
    REQUIRE_FALSE(s3.is_abelian());
    // Q8 has a unique element of order 2; D4 has five
    auto order2 = [](const Group& g) {
        unsigned c = 0;
        for (unsigned x = 0; x < g.n; ++x)
            if (x != g.identity && g.mul(x, x) == g.identity) ++c;
        return c;
    };
    REQUIRE(order2(catalog_group("Q8")) == 1);
    REQUIRE(order2(catalog_group("D4")) == 5);
    REQUIRE(catalog_group("D4").exponent() == 4);
    REQUIRE(catalog_group("A4").exponent() == 6);
}

TEST_CASE("subgroup enumeration") {
    Group triv = validate_group({0}, 0, {"e"});
    REQUIRE(subgroups(triv).size() == 1);
    REQUIRE(subgroups(catalog_group("C4")).size() == 3);
    REQUIRE(subgroups(catalog_group("S3")).size() == 6);
    // brute-force subset oracle agrees
    for (const char* name : {"C4", "S3", "C2xC2", "D4", "Q8"}) {
        const Group& g = catalog_group(name);
        REQUIRE(subgroups(g).size() == oracle::count_subgroups_bruteforce(g));
    }
    // every returned subgroup re-validates independently
    for (const Subgroup& h : subgroups(catalog_group("D4"))) {
        REQUIRE(is_subgroup(catalog_group("D4"), h.elems));
        // closure under inverse, explicitly
        for (unsigned e : h.elems) REQUIRE(h.contains(catalog_group("D4").inv(e)));
    }
}

TEST_CASE("conjugacy, cosets, normality") {
    const Group& s3 = catalog_group("S3");
    auto classes = conjugacy_classes(s3);
    std::vector<size_t> sizes;
    for (auto& c : classes) sizes.push_back(c.size());
    std::sort(sizes.begin(), sizes.end());
    REQUIRE(sizes == std::vector<size_t>{1, 2, 3});
    // abelian: all singletons
    for (auto& c : conjugacy_classes(catalog_group("C2xC2"))) REQUIRE(c.size() == 1);
    // A3 normal in S3
    std::vector<unsigned> a3{s3.identity};
    for (unsigned x = 0; x < s3.n; ++x)
        if (s3.element_order(x) == 3) a3.push_back(x);
    Subgroup h = make_subgroup(s3, a3);
    REQUIRE(is_normal(s3, h));
    // a transposition subgroup is not normal
    unsigned t = 0;
    for (unsigned x = 0; x < s3.n; ++x)
        if (s3.element_order(x) == 2) t = x;
    REQUIRE_FALSE(is_normal(s3, make_subgroup(s3, {s3.identity, t})));
    // Lagrange: |G| = sum over cosets of |H|
    for (const char* name : {"S3", "D4", "A4"}) {
        const Group& g = catalog_group(name);
        for (const Subgroup& sub : subgroups(g)) {
            auto cosets = left_cosets(g, sub);
            size_t total = 0;
            for (auto& c : cosets) total += c.size();
            REQUIRE(total == g.n);
            for (auto& c : cosets) REQUIRE(c.size() == sub.order());
        }
    }
    // conjugate subgroups keep their order
    const Group& d4 = catalog_group("D4");
    for (const Subgroup& sub : subgroups(d4))
        for (unsigned x = 0; x < d4.n; ++x)
            REQUIRE(conjugate_subgroup(d4, sub, x).order() == sub.order());
    // centralizer of a central element is the whole group
    REQUIRE(centralizer(d4, d4.index_of("r2")).order() == 8);
    REQUIRE(centralizer(d4, d4.index_of("r")).order() == 4);
}

TEST_CASE("subgroup_group and generators") {
    const Group& d4 = catalog_group("D4");
    Subgroup k = make_subgroup(
        d4, {d4.identity, d4.index_of("r2"), d4.index_of("s"), d4.index_of("r2s")});
    SubgroupGroup kg = subgroup_group(d4, k);
    REQUIRE(kg.group.n == 4);
    REQUIRE(kg.group.is_abelian());
    for (unsigned p = 0; p < 4; ++p) REQUIRE(kg.from_parent.at(kg.to_parent[p]) == p);
    // generators generate
    for (const char* name : {"S3", "D4", "Q8", "A4"}) {
        const Group& g = catalog_group(name);
        auto gens = generators(g);
        REQUIRE(closure(g, gens).size() == g.n);
        REQUIRE(gens.size() <= 3);
    }
}
