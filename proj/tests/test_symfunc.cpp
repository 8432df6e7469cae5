#include <catch2/catch.hpp>

#include <algorithm>

#include "surfhom/symfunc.hpp"

using namespace surfhom;

namespace {

// Independent route for the partition numbers: the pentagonal-number
// recurrence, sharing nothing with the hook/partition enumeration code.
std::vector<BigInt> pentagonal_partition_numbers(unsigned N) {
    std::vector<BigInt> p(N + 1, BigInt(0));
    p[0] = 1;
    for (unsigned n = 1; n <= N; ++n) {
        for (long k = 1;; ++k) {
            long g1 = k * (3 * k - 1) / 2;
            long g2 = k * (3 * k + 1) / 2;
            if (g1 > static_cast<long>(n) && g2 > static_cast<long>(n)) break;
            BigInt sign = (k % 2 == 1) ? 1 : -1;
            if (g1 <= static_cast<long>(n)) p[n] += sign * p[n - g1];
            if (g2 <= static_cast<long>(n)) p[n] += sign * p[n - g2];
        }
    }
    return p;
}

}  // namespace

TEST_CASE("partition enumeration", "[symfunc]") {
    SECTION("counts") {
        CHECK(partitions_of(0).size() == 1);
        CHECK(partitions_of(4).size() == 5);
        CHECK(partitions_of(10).size() == 42);
    }
    SECTION("reverse lexicographic order") {
        auto ps = partitions_of(4);
        REQUIRE(ps.size() == 5);
        CHECK(ps[0] == Partition({4}));
        CHECK(ps[1] == Partition({3, 1}));
        CHECK(ps[2] == Partition({2, 2}));
        CHECK(ps[3] == Partition({2, 1, 1}));
        CHECK(ps[4] == Partition({1, 1, 1, 1}));
    }
    SECTION("conjugation is an involution") {
        for (const Partition& p : partitions_of(8)) {
            CHECK(conjugate(conjugate(p)) == p);
            CHECK(conjugate(p).weight() == p.weight());
        }
    }
}

TEST_CASE("hook products", "[symfunc]") {
    for (unsigned n = 1; n <= 6; ++n) {
        CHECK(hook_product(Partition({n})) == factorial(n));
        CHECK(hook_product(Partition(std::vector<unsigned>(n, 1))) == factorial(n));
    }
    CHECK(hook_product(Partition({2, 1})) == 3);
    CHECK(hook_product(Partition({2, 2})) == 12);
    // n!/H is a character degree, hence integral and positive
    for (unsigned n = 1; n <= 8; ++n)
        for (const Partition& p : partitions_of(n)) {
            CHECK(divides(hook_product(p), factorial(n)));
            CHECK(hook_product(p) >= 1);
        }
}

TEST_CASE("contents", "[symfunc]") {
    auto sorted_contents = [](const Partition& p) {
        auto c = contents(p);
        std::sort(c.begin(), c.end());
        return c;
    };
    CHECK(sorted_contents(Partition({1})) == std::vector<long>{0});
    CHECK(sorted_contents(Partition({2, 1})) == std::vector<long>{-1, 0, 1});
    CHECK(sorted_contents(Partition({3})) == std::vector<long>{0, 1, 2});
    // sum of contents is invariant under conjugation up to sign
    for (const Partition& p : partitions_of(6)) {
        long total = 0;
        for (long c : contents(p)) total += c;
        long total_conj = 0;
        for (long c : contents(conjugate(p))) total_conj += c;
        CHECK(total == -total_conj);
    }
}

TEST_CASE("centralizer orders", "[symfunc]") {
    CHECK(centralizer_order(Partition(std::vector<unsigned>(5, 1))) == factorial(5));
    CHECK(centralizer_order(Partition({7})) == 7);
    CHECK(centralizer_order(Partition({2, 1})) == 2);
    SECTION("n!/z_mu matches the conjugacy class sizes of S_4") {
        FiniteGroup G = build_group("builtin:sym:4");
        ConjugacyClassTable classes = conjugacy_classes(G);
        for (std::size_t c = 0; c < classes.count(); ++c) {
            Partition mu = cycle_type(G.element(classes.cls((int)c).representative));
            CHECK(BigInt(static_cast<unsigned long>(classes.cls((int)c).size())) ==
                  factorial(4) / centralizer_order(mu));
        }
    }
    SECTION("sum of 1/z_mu is 1") {
        for (unsigned n = 1; n <= 8; ++n) {
            Rational total(0);
            for (const Partition& mu : partitions_of(n))
                total += Rational(1) / Rational(centralizer_order(mu));
            CHECK(total == 1);
        }
    }
}

TEST_CASE("hook length formula matches murnaghan-nakayama degrees", "[symfunc]") {
    for (unsigned n = 1; n <= 8; ++n) {
        Partition identity_type(std::vector<unsigned>(n, 1));
        for (const Partition& lambda : partitions_of(n))
            CHECK(BigInt(static_cast<long>(symmetric_group_character(lambda, identity_type))) ==
                  factorial(n) / hook_product(lambda));
    }
}

TEST_CASE("ch isometry", "[symfunc]") {
    FiniteGroup G = build_group("builtin:sym:3");
    ConjugacyClassTable classes = conjugacy_classes(G);
    CharacterTable table = compute_character_table(G, classes);

    SECTION("n! times the identity indicator maps to p_{1^n}") {
        std::vector<Cyclotomic> v(classes.count(), Cyclotomic::zero(6));
        v[0] = Cyclotomic::integer(6, 6);
        PBasisVector image = ch(ClassFunction(G, classes, std::move(v)));
        PBasisVector expect;
        expect.weight = 3;
        expect.set(Partition({1, 1, 1}), Rational(1));
        CHECK(image == expect);
    }
    SECTION("ch of each irreducible character is a Schur function") {
        // match Dixon rows to partitions by their value rows
        for (const Partition& lambda : partitions_of(3)) {
            for (std::size_t r = 0; r < table.size(); ++r) {
                bool matches = true;
                for (std::size_t c = 0; c < classes.count() && matches; ++c) {
                    Partition mu = cycle_type(G.element(classes.cls((int)c).representative));
                    matches = table.value((int)r, (int)c) ==
                              Cyclotomic::integer(
                                  6, static_cast<long>(symmetric_group_character(lambda, mu)));
                }
                if (matches)
                    CHECK(ch(character_function(table, (int)r)) == schur_in_p(lambda));
            }
        }
    }
    SECTION("reconstruction from the p-expansion is exact") {
        ClassFunction f = oracle_class_function(parse_word("x1^2", 1), G, classes);
        PBasisVector image = ch(f);
        for (std::size_t c = 0; c < classes.count(); ++c) {
            Partition mu = cycle_type(G.element(classes.cls((int)c).representative));
            CHECK(f.value((int)c).rational_value() ==
                  image.coeff(mu) * Rational(centralizer_order(mu)));
        }
    }
    SECTION("non-symmetric groups are rejected") {
        FiniteGroup Q = build_group("builtin:q8");
        ConjugacyClassTable qcls = conjugacy_classes(Q);
        std::vector<Cyclotomic> v(qcls.count(), Cyclotomic::integer(4, 1));
        CHECK_THROWS_AS(ch(ClassFunction(Q, qcls, std::move(v))), NotSymmetricGroup);
    }
}

TEST_CASE("schur expansions", "[symfunc]") {
    SECTION("small cases") {
        PBasisVector s1;
        s1.weight = 1;
        s1.set(Partition({1}), Rational(1));
        CHECK(schur_in_p(Partition({1})) == s1);

        PBasisVector s2;
        s2.weight = 2;
        s2.set(Partition({1, 1}), Rational(1, 2));
        s2.set(Partition({2}), Rational(1, 2));
        CHECK(schur_in_p(Partition({2})) == s2);

        PBasisVector s11;
        s11.weight = 2;
        s11.set(Partition({1, 1}), Rational(1, 2));
        s11.set(Partition({2}), Rational(-1, 2));
        CHECK(schur_in_p(Partition({1, 1})) == s11);
    }
    SECTION("orthonormal under the p-basis inner product") {
        for (unsigned n = 1; n <= 5; ++n) {
            auto ps = partitions_of(n);
            for (const Partition& a : ps)
                for (const Partition& b : ps)
                    CHECK(p_inner_product(schur_in_p(a), schur_in_p(b)) ==
                          Rational(a == b ? 1 : 0));
        }
    }
}

TEST_CASE("word power-sum averages", "[symfunc]") {
    SECTION("gamma = x1 gives sum of p_mu / z_mu") {
        for (unsigned n : {2u, 3u, 4u}) {
            PBasisVector avg = word_power_sum_average(parse_word("x1", 1), n);
            for (const Partition& mu : partitions_of(n))
                CHECK(avg.coeff(mu) == Rational(1) / Rational(centralizer_order(mu)));
        }
    }
    SECTION("x1^2 equals sum of Schur functions (k = 1)") {
        for (unsigned n : {2u, 3u, 4u}) {
            PBasisVector avg = word_power_sum_average(parse_word("x1^2", 1), n);
            PBasisVector expect;
            expect.weight = n;
            for (const Partition& lambda : partitions_of(n)) expect += schur_in_p(lambda);
            CHECK(avg == expect);
        }
    }
    SECTION("[x1,x2] equals sum of H_lambda s_lambda (g = 1)") {
        for (unsigned n : {2u, 3u, 4u}) {
            PBasisVector avg = word_power_sum_average(parse_word("[x1,x2]", 2), n);
            PBasisVector expect;
            expect.weight = n;
            for (const Partition& lambda : partitions_of(n)) {
                PBasisVector s = schur_in_p(lambda);
                s *= Rational(hook_product(lambda));
                expect += s;
            }
            CHECK(avg == expect);
        }
    }
    SECTION("x1^2 x2^2 equals sum of H_lambda s_lambda (k = 2)") {
        for (unsigned n : {2u, 3u, 4u}) {
            PBasisVector avg = word_power_sum_average(parse_word("x1^2 x2^2", 2), n);
            PBasisVector expect;
            expect.weight = n;
            for (const Partition& lambda : partitions_of(n)) {
                PBasisVector s = schur_in_p(lambda);
                s *= Rational(hook_product(lambda));
                expect += s;
            }
            CHECK(avg == expect);
        }
    }
}

TEST_CASE("all symmetric group indicators are 1", "[symfunc]") {
    for (unsigned n = 1; n <= 5; ++n) {
        FiniteGroup G = build_group("builtin:sym:" + std::to_string(n));
        ConjugacyClassTable classes = conjugacy_classes(G);
        CharacterTable table = compute_character_table(G, classes);
        for (std::size_t chi = 0; chi < table.size(); ++chi)
            CHECK(table.fs_indicator((int)chi) == 1);
    }
}

TEST_CASE("principal specialization identity", "[symfunc]") {
    SECTION("q = 1, squares k = 1 collapses to 1") {
        for (unsigned n = 1; n <= 5; ++n) {
            auto [lhs, rhs] = specialized_identity_check(SpecializationKind::Squares, 1, n, 1);
            CHECK(lhs == 1);
            CHECK(rhs == 1);
        }
    }
    SECTION("n = 1 gives q for any kind") {
        for (long q : {1L, 2L, 3L}) {
            auto [l1, r1] = specialized_identity_check(SpecializationKind::Squares, 2, 1, q);
            CHECK(l1 == q);
            CHECK(r1 == q);
            auto [l2, r2] = specialized_identity_check(SpecializationKind::Commutators, 1, 1, q);
            CHECK(l2 == q);
            CHECK(r2 == q);
        }
    }
    SECTION("squares k = 2, n = 3, q = 2 agree") {
        auto [lhs, rhs] = specialized_identity_check(SpecializationKind::Squares, 2, 3, 2);
        CHECK(lhs == rhs);
    }
    SECTION("exhaustive over q in {1,2,3}, n <= 5, k <= 2, g = 1") {
        for (long q : {1L, 2L, 3L})
            for (unsigned n = 1; n <= 5; ++n) {
                for (unsigned k : {1u, 2u}) {
                    auto [lhs, rhs] =
                        specialized_identity_check(SpecializationKind::Squares, k, n, q);
                    INFO("squares k=" << k << " n=" << n << " q=" << q);
                    CHECK(lhs == rhs);
                }
                auto [lhs, rhs] =
                    specialized_identity_check(SpecializationKind::Commutators, 1, n, q);
                INFO("commutators n=" << n << " q=" << q);
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("generating function coefficients", "[symfunc]") {
    SECTION("e = 0 gives the partition numbers up to 40") {
        auto coeffs = genfun_coefficients(0, 40);
        auto expect = pentagonal_partition_numbers(40);
        REQUIRE(coeffs.size() == expect.size());
        for (std::size_t n = 0; n < coeffs.size(); ++n) CHECK(coeffs[n] == expect[n]);
        CHECK(coeffs[5] == 7);
        CHECK(coeffs[10] == 42);
    }
    SECTION("e = 1 sums the character degrees") {
        auto coeffs = genfun_coefficients(1, 6);
        CHECK(coeffs[3] == 4);  // 1 + 2 + 1
        // degree sums count involutions including the identity
        for (unsigned n = 1; n <= 6; ++n) {
            FiniteGroup G = build_group("builtin:sym:" + std::to_string(n));
            long involutions = 0;
            for (int x = 0; x < static_cast<int>(G.order()); ++x)
                if (G.mul(x, x) == G.identity()) ++involutions;
            CHECK(coeffs[n] == involutions);
        }
    }
    SECTION("e = 2 gives n!") {
        auto coeffs = genfun_coefficients(2, 8);
        for (unsigned n = 0; n <= 8; ++n) CHECK(coeffs[n] == factorial(n));
    }
    SECTION("negative exponents are rejected") {
        CHECK_THROWS_AS(genfun_coefficients(-1, 5), Error);
    }
}
