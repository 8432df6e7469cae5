#include <catch2/catch.hpp>

#include <random>

#include "surfhom/cyclotomic.hpp"

using namespace surfhom;

TEST_CASE("full root-of-unity sums vanish", "[cyclotomic]") {
    for (unsigned e : {2u, 3u, 4u, 5u, 6u, 8u, 12u, 15u, 30u, 60u}) {
        Cyclotomic sum = Cyclotomic::zero(e);
        for (unsigned j = 0; j < e; ++j) sum += Cyclotomic::root(e, j);
        CHECK(sum.is_zero());
    }
}

TEST_CASE("subgroup relations", "[cyclotomic]") {
    // zeta_6^3 = -1, zeta_6^2 = zeta_6 - 1 (from x^2 - x + 1)
    CHECK(Cyclotomic::root(6, 3) == Cyclotomic::integer(6, -1));
    CHECK(Cyclotomic::root(6, 2) + Cyclotomic::rational(6, 1) == Cyclotomic::root(6, 1));
    // zeta_4^2 = -1
    CHECK(Cyclotomic::root(4, 2) == Cyclotomic::integer(4, -1));
    // zeta_3 + zeta_3^2 = -1
    CHECK(Cyclotomic::root(3, 1) + Cyclotomic::root(3, 2) == Cyclotomic::integer(3, -1));
    // conductor-2 values are rational
    CHECK(Cyclotomic::root(2, 1) == Cyclotomic::integer(2, -1));
}

TEST_CASE("power law and conjugation", "[cyclotomic]") {
    for (unsigned e : {5u, 6u, 12u}) {
        for (unsigned a = 0; a < e; ++a) {
            for (unsigned b = 0; b < e; ++b)
                CHECK(Cyclotomic::root(e, a) * Cyclotomic::root(e, b) ==
                      Cyclotomic::root(e, static_cast<long>(a + b)));
            CHECK(Cyclotomic::root(e, a).conj() == Cyclotomic::root(e, -(long)a));
            CHECK(Cyclotomic::root(e, a).conj().conj() == Cyclotomic::root(e, a));
            // zeta^a * conj(zeta^a) = 1
            CHECK(Cyclotomic::root(e, a) * Cyclotomic::root(e, a).conj() ==
                  Cyclotomic::rational(e, 1));
        }
    }
}

TEST_CASE("rationality detection", "[cyclotomic]") {
    CHECK(Cyclotomic::zero(12).is_rational_integer());
    CHECK(Cyclotomic::integer(12, 7).is_rational_integer());
    CHECK_FALSE(Cyclotomic::rational(12, Rational(1, 2)).is_rational_integer());
    CHECK(Cyclotomic::rational(12, Rational(1, 2)).is_rational());
    CHECK((Cyclotomic::root(4, 1) + Cyclotomic::root(4, 3)).is_zero());
    CHECK((Cyclotomic::root(5, 1) + Cyclotomic::root(5, 4)).is_rational() == false);
    Cyclotomic x = Cyclotomic::root(3, 1) + Cyclotomic::root(3, 2);
    CHECK(x.is_rational_integer());
    CHECK(x.integer_value() == -1);
    CHECK_THROWS_AS(Cyclotomic::root(5, 1).rational_value(), NonIntegerResult);
}

TEST_CASE("algebra is associative and distributive on random values", "[cyclotomic]") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<unsigned> expo(0, 11);
    auto random_value = [&] {
        Cyclotomic v = Cyclotomic::zero(12);
        for (int t = 0; t < 4; ++t)
            v += Cyclotomic::root(12, expo(rng)) * Rational(coeff(rng));
        return v;
    };
    for (int t = 0; t < 60; ++t) {
        Cyclotomic a = random_value(), b = random_value(), c = random_value();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK((a + b).conj() == a.conj() + b.conj());
        CHECK(a - a == Cyclotomic::zero(12));
    }
}

TEST_CASE("comparison is a strict total order", "[cyclotomic]") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> coeff(-2, 2);
    std::uniform_int_distribution<unsigned> expo(0, 9);
    auto random_value = [&] {
        Cyclotomic v = Cyclotomic::zero(10);
        for (int t = 0; t < 3; ++t)
            v += Cyclotomic::root(10, expo(rng)) * Rational(coeff(rng));
        return v;
    };
    for (int t = 0; t < 80; ++t) {
        Cyclotomic a = random_value(), b = random_value(), c = random_value();
        int ab = Cyclotomic::compare(a, b);
        CHECK(ab == -Cyclotomic::compare(b, a));
        CHECK((ab == 0) == (a == b));
        if (ab < 0 && Cyclotomic::compare(b, c) < 0) CHECK(Cyclotomic::compare(a, c) < 0);
    }
}

TEST_CASE("printing", "[cyclotomic]") {
    CHECK(Cyclotomic::zero(6).str() == "0");
    CHECK(Cyclotomic::integer(6, -2).str() == "-2");
    CHECK(Cyclotomic::root(7, 1).str() == "z7");
    CHECK((Cyclotomic::root(7, 2) * Rational(3, 2)).str() == "3/2*z7^2");
    CHECK((Cyclotomic::rational(7, 1) - Cyclotomic::root(7, 1)).str() == "1 - z7");
    // zeta_6 itself is outside the canonical spanning set and reduces
    CHECK(Cyclotomic::root(6, 1).str() == "1 + z6^2");
}

TEST_CASE("rational values mix with any conductor", "[cyclotomic]") {
    Cyclotomic r = Cyclotomic::integer(1, 5);
    Cyclotomic z = Cyclotomic::root(6, 1);
    CHECK((r + z) - z == Cyclotomic::integer(6, 5));
    CHECK(r * z == z * Rational(5));
    CHECK(Cyclotomic() == Cyclotomic::zero(6));
}
