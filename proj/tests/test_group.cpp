#include <catch2/catch.hpp>

#include <random>
#include <set>

#include "surfhom/group.hpp"

using namespace surfhom;

TEST_CASE("cycle notation round trips", "[group]") {
    for (const char* s : {"(1 2 3)(4 5)", "(1 2)", "(2 4 6)", "()"}) {
        Permutation p = Permutation::parse_cycles(s);
        Permutation q = Permutation::parse_cycles(p.cycle_string(), p.degree());
        CHECK(p == q);
    }
    CHECK(Permutation::parse_cycles("( 1   2 ) ( 3 4 )") ==
          Permutation::parse_cycles("(1 2)(3 4)"));
}

TEST_CASE("invalid permutations are rejected", "[group]") {
    CHECK_THROWS_AS(Permutation({0, 0, 1}), InvalidPermutation);
    CHECK_THROWS_AS(Permutation::parse_cycles("(1 2 1)"), InvalidPermutation);
    CHECK_THROWS_AS(Permutation::parse_cycles("(0 1)"), InvalidPermutation);
    CHECK_THROWS_AS(Permutation::parse_cycles("(1 65)"), InvalidPermutation);
    CHECK_THROWS_AS(Permutation::parse_cycles("(1 2"), InvalidPermutation);
}

TEST_CASE("builtin group orders", "[group]") {
    CHECK(build_group("builtin:sym:3").order() == 6);
    CHECK(build_group("builtin:sym:4").order() == 24);
    CHECK(build_group("builtin:alt:4").order() == 12);
    CHECK(build_group("builtin:alt:5").order() == 60);
    CHECK(build_group("builtin:dih:4").order() == 8);
    CHECK(build_group("builtin:dih:2").order() == 4);
    CHECK(build_group("builtin:dih:1").order() == 2);
    CHECK(build_group("builtin:cyc:6").order() == 6);
    CHECK(build_group("builtin:q8").order() == 8);
}

TEST_CASE("trivial group", "[group]") {
    FiniteGroup G = build_group("builtin:cyc:1");
    CHECK(G.order() == 1);
    CHECK(conjugacy_classes(G).count() == 1);
    CHECK(G.exponent() == 1);
}

TEST_CASE("quaternion generators close to order 8", "[group]") {
    // the same i, j permutations the builtin uses, fed through the perms: path
    FiniteGroup G = build_group("perms:(1 3 2 4)(5 7 6 8)\n(1 5 2 6)(3 8 4 7)");
    CHECK(G.order() == 8);
    CHECK(G.exponent() == 4);
    CHECK(conjugacy_classes(G).count() == 5);
}

TEST_CASE("order cap is enforced", "[group]") {
    CHECK_THROWS_AS(build_group("builtin:sym:7"), OrderCapExceeded);
    CHECK(build_group("builtin:sym:7", 6000).order() == 5040);
}

TEST_CASE("group spec parse errors", "[group]") {
    CHECK_THROWS_AS(parse_group_spec("builtin:nope:3"), GroupSpecError);
    CHECK_THROWS_AS(build_group("builtin:wat:3"), GroupSpecError);
    CHECK_THROWS_AS(parse_group_spec("builtin:sym"), GroupSpecError);
    CHECK_THROWS_AS(parse_group_spec("perms:"), GroupSpecError);
    CHECK_THROWS_AS(parse_group_spec("nonsense"), GroupSpecError);
}

TEST_CASE("index round trip and inverse antihomomorphism", "[group]") {
    for (const char* spec : {"builtin:sym:4", "builtin:q8", "builtin:dih:4"}) {
        FiniteGroup G = build_group(spec);
        for (int i = 0; i < static_cast<int>(G.order()); ++i)
            CHECK(G.index_of(G.element(i)) == i);
        std::mt19937 rng(42);
        std::uniform_int_distribution<int> pick(0, static_cast<int>(G.order()) - 1);
        for (int t = 0; t < 200; ++t) {
            int a = pick(rng), b = pick(rng);
            CHECK(G.inv(G.mul(a, b)) == G.mul(G.inv(b), G.inv(a)));
        }
    }
}

TEST_CASE("multiplication agrees with composition above the dense-table limit", "[group]") {
    FiniteGroup G = build_group("builtin:sym:6");  // 720 elements, no dense table
    REQUIRE(G.order() == 720);
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> pick(0, 719);
    for (int t = 0; t < 200; ++t) {
        int a = pick(rng), b = pick(rng);
        CHECK(G.element(G.mul(a, b)) == G.element(a).compose(G.element(b)));
    }
}

TEST_CASE("conjugacy classes of S3 in canonical order", "[group]") {
    FiniteGroup G = build_group("builtin:sym:3");
    ConjugacyClassTable cls = conjugacy_classes(G);
    REQUIRE(cls.count() == 3);
    CHECK(cls.cls(0).size() == 1);  // identity first
    CHECK(cls.cls(0).representative == 0);
    CHECK(cls.cls(1).size() == 2);  // 3-cycles
    CHECK(cls.cls(2).size() == 3);  // transpositions
}

TEST_CASE("abelian groups have singleton classes", "[group]") {
    FiniteGroup G = build_group("builtin:cyc:6");
    ConjugacyClassTable cls = conjugacy_classes(G);
    REQUIRE(cls.count() == 6);
    for (int i = 0; i < 6; ++i) CHECK(cls.cls(i).size() == 1);
}

TEST_CASE("S4 has five classes", "[group]") {
    FiniteGroup G = build_group("builtin:sym:4");
    CHECK(conjugacy_classes(G).count() == 5);
}

TEST_CASE("classes partition the group and are conjugation-closed", "[group]") {
    for (const char* spec : {"builtin:sym:4", "builtin:alt:4", "builtin:q8", "builtin:dih:4"}) {
        FiniteGroup G = build_group(spec);
        ConjugacyClassTable cls = conjugacy_classes(G);
        std::size_t total = 0;
        for (std::size_t c = 0; c < cls.count(); ++c) {
            total += cls.cls(static_cast<int>(c)).size();
            CHECK(G.order() % cls.cls(static_cast<int>(c)).size() == 0);
            std::set<int> members(cls.cls(static_cast<int>(c)).members.begin(),
                                  cls.cls(static_cast<int>(c)).members.end());
            for (int m : members)
                for (int g = 0; g < static_cast<int>(G.order()); ++g)
                    CHECK(members.count(G.mul(G.mul(g, m), G.inv(g))) == 1);
        }
        CHECK(total == G.order());
        for (int x = 0; x < static_cast<int>(G.order()); ++x)
            CHECK(cls.class_of(x) >= 0);
    }
}

TEST_CASE("exponent values", "[group]") {
    CHECK(build_group("builtin:sym:3").exponent() == 6);
    CHECK(build_group("builtin:q8").exponent() == 4);
    CHECK(build_group("builtin:cyc:7").exponent() == 7);
    CHECK(build_group("builtin:cyc:12").exponent() == 12);
    FiniteGroup G = build_group("builtin:sym:4");
    for (int i = 0; i < static_cast<int>(G.order()); ++i)
        CHECK(G.exponent() % G.element_order(i) == 0);
}

TEST_CASE("element powers", "[group]") {
    FiniteGroup G = build_group("builtin:sym:4");
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> pick(0, 23);
    for (int t = 0; t < 50; ++t) {
        int a = pick(rng);
        CHECK(G.pow(a, 0) == G.identity());
        CHECK(G.pow(a, 1) == a);
        CHECK(G.pow(a, -1) == G.inv(a));
        CHECK(G.pow(a, 5) == G.mul(G.pow(a, 3), G.pow(a, 2)));
        CHECK(G.pow(a, static_cast<long long>(G.element_order(a))) == G.identity());
    }
}
