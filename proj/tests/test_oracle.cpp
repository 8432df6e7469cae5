#include <catch2/catch.hpp>

#include "surfhom/oracle.hpp"

using namespace surfhom;

namespace {

struct GC {
    FiniteGroup G;
    ConjugacyClassTable classes;
    explicit GC(const std::string& spec) : G(build_group(spec)), classes(conjugacy_classes(G)) {}
};

}  // namespace

TEST_CASE("f_x1 is constant one", "[oracle]") {
    for (const char* spec : {"builtin:sym:3", "builtin:q8"}) {
        GC f(spec);
        for (const BigInt& c : oracle_element_counts(parse_word("x1", 1), f.G))
            CHECK(c == 1);
    }
}

TEST_CASE("square counts on S3", "[oracle]") {
    GC f("builtin:sym:3");
    // canonical class order: identity, 3-cycles, transpositions
    auto counts = oracle_class_counts(parse_word("x1^2", 1), f.G, f.classes);
    REQUIRE(counts.size() == 3);
    CHECK(counts[0] == 4);
    CHECK(counts[1] == 1);
    CHECK(counts[2] == 0);
}

TEST_CASE("commutator solutions on S3", "[oracle]") {
    GC f("builtin:sym:3");
    auto counts = oracle_element_counts(parse_word("[x1,x2]", 2), f.G);
    CHECK(counts[static_cast<std::size_t>(f.G.identity())] == 18);
}

TEST_CASE("total solution count is |G|^r", "[oracle]") {
    GC f("builtin:sym:3");
    for (const char* text : {"x1^2", "[x1,x2]", "x1 x2 x1^-1 x2"}) {
        Word w = parse_word(text, 2);
        auto counts = oracle_element_counts(w, f.G);
        BigInt total = 0;
        for (const BigInt& c : counts) total += c;
        CHECK(total == int_pow(BigInt(6), w.rank()));
    }
}

TEST_CASE("boundary counts", "[oracle]") {
    GC f("builtin:sym:3");
    SECTION("empty word with identity boundary") {
        CHECK(oracle_count_with_boundary(Word::empty(0), f.G, f.classes, {0}) == 1);
    }
    SECTION("x1^2 with 3-cycle boundary") {
        CHECK(oracle_count_with_boundary(parse_word("x1^2", 1), f.G, f.classes, {1}) == 2);
    }
    SECTION("x1^2 x2^2 with transposition boundary vanishes (squares are even)") {
        CHECK(oracle_count_with_boundary(parse_word("x1^2 x2^2", 2), f.G, f.classes, {2}) == 0);
    }
    SECTION("no boundary equals f(1)") {
        Word w = parse_word("[x1,x2]", 2);
        CHECK(oracle_count_with_boundary(w, f.G, f.classes, {}) == 18);
    }
}

TEST_CASE("nth root counts", "[oracle]") {
    GC f("builtin:sym:3");
    SECTION("n = 1 is constant one") {
        for (const BigInt& c : oracle_nth_root_counts(f.G, f.classes, 1)) CHECK(c == 1);
    }
    SECTION("n = 2 gives square-root counts per class") {
        auto counts = oracle_nth_root_counts(f.G, f.classes, 2);
        CHECK(counts == std::vector<BigInt>{4, 1, 0});
    }
    SECTION("n = 3 gives cube-root counts per class") {
        auto counts = oracle_nth_root_counts(f.G, f.classes, 3);
        CHECK(counts == std::vector<BigInt>{3, 0, 1});
    }
    SECTION("agrees with the full oracle on the power word") {
        for (long long n : {2, 3, 4}) {
            auto direct = oracle_nth_root_counts(f.G, f.classes, n);
            auto via_word =
                oracle_class_counts(parse_word("x1^" + std::to_string(n), 1), f.G, f.classes);
            CHECK(direct == via_word);
        }
    }
}

TEST_CASE("results are independent of the worker count", "[oracle]") {
    GC f("builtin:sym:4");
    Word w = parse_word("x1^2 x2^2", 2);
    Budget b1{BigInt(100000000), 1};
    auto ref = oracle_element_counts(w, f.G, b1);
    for (unsigned workers : {2u, 3u, 5u, 8u}) {
        Budget bw{BigInt(100000000), workers};
        CHECK(oracle_element_counts(w, f.G, bw) == ref);
    }
    // boundary path too
    auto refb = oracle_count_with_boundary(w, f.G, f.classes, {1, 2}, b1);
    for (unsigned workers : {2u, 4u}) {
        Budget bw{BigInt(100000000), workers};
        CHECK(oracle_count_with_boundary(w, f.G, f.classes, {1, 2}, bw) == refb);
    }
}

TEST_CASE("budget is enforced", "[oracle]") {
    GC f("builtin:sym:4");
    Budget tiny{BigInt(100), 1};
    CHECK_THROWS_AS(oracle_element_counts(parse_word("[x1,x2]", 2), f.G, tiny), BudgetExceeded);
    // exactly at the cap is allowed
    Budget exact{BigInt(24) * 24, 1};
    CHECK_NOTHROW(oracle_element_counts(parse_word("[x1,x2]", 2), f.G, exact));
}

TEST_CASE("rank-0 enumeration", "[oracle]") {
    GC f("builtin:sym:3");
    auto counts = oracle_element_counts(Word::empty(0), f.G);
    CHECK(counts[0] == 1);
    BigInt total = 0;
    for (const BigInt& c : counts) total += c;
    CHECK(total == 1);
}
