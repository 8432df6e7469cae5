#pragma once

// Named identity suites runnable from the CLI: each check pits a
// character-sum formula against an independent route (enumeration oracle,
// summation identity, or recurrence) and must agree exactly.

#include <string>
#include <vector>

#include "surfhom/class_function.hpp"
#include "surfhom/surface_count.hpp"
#include "surfhom/symfunc.hpp"

namespace surfhom {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct SuiteResult {
    std::string suite;
    std::vector<CheckResult> checks;
    bool all_passed() const {
        for (const CheckResult& c : checks)
            if (!c.passed) return false;
        return true;
    }
};

inline const std::vector<std::string>& zoo_specs() {
    static const std::vector<std::string> zoo = {
        "builtin:sym:3", "builtin:sym:4", "builtin:alt:4", "builtin:dih:4",
        "builtin:q8",    "builtin:cyc:6", "builtin:cyc:7"};
    return zoo;
}

inline std::vector<std::string> verify_suite_names() {
    return {"solomon", "tuple-sum", "linear-limit", "symfunc-theorem", "specialization",
            "genfun"};
}

// Partition numbers by the pentagonal-number recurrence; independent of the
// partition enumeration and hook products that genfun_coefficients uses.
inline std::vector<BigInt> pentagonal_partition_numbers(unsigned N) {
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

namespace detail {

struct ZooContext {
    std::string spec;
    FiniteGroup G;
    ConjugacyClassTable classes;
    CharacterTable table;
    explicit ZooContext(const std::string& s)
        : spec(s), G(build_group(s)), classes(conjugacy_classes(G)),
          table(compute_character_table(G, classes)) {}
};

inline SuiteResult run_solomon(const Budget& budget) {
    SuiteResult out{"solomon", {}};
    const std::vector<std::pair<std::string, unsigned>> words = {
        {"x1 x2", 2},      {"[x1,x2]", 2},    {"x1^2 x2^2", 2},
        {"x1^2 x2^3", 2},  {"[x1,x2,x3]", 3}, {"x1 x2 x1^-1 x2", 2}};
    for (const std::string& spec : zoo_specs()) {
        FiniteGroup G = build_group(spec);
        for (const auto& [text, rank] : words) {
            Word w = parse_word(text, rank);
            BigInt f1 = oracle_element_counts(w, G, budget)[0];
            bool ok = divides(BigInt(static_cast<unsigned long>(G.order())), f1);
            out.checks.push_back({spec + " gamma=" + text, ok,
                                  "f(1)=" + f1.get_str() + " |G|=" + std::to_string(G.order())});
        }
    }
    return out;
}

inline SuiteResult run_tuple_sum(const Budget&) {
    SuiteResult out{"tuple-sum", {}};
    for (const std::string& spec : zoo_specs()) {
        ZooContext z(spec);
        for (unsigned n : {1u, 2u}) {
            for (unsigned g : {0u, 1u}) {
                auto [lhs, rhs] = tuple_sum_identity(z.G, z.table, z.classes,
                                                     SurfaceKind::Orientable, g, n);
                out.checks.push_back({spec + " orientable g=" + std::to_string(g) +
                                          " n=" + std::to_string(n),
                                      lhs == rhs, lhs.get_str() + " vs " + rhs.get_str()});
            }
            for (unsigned k : {1u, 2u}) {
                auto [lhs, rhs] = tuple_sum_identity(z.G, z.table, z.classes,
                                                     SurfaceKind::Nonorientable, k, n);
                out.checks.push_back({spec + " nonorientable k=" + std::to_string(k) +
                                          " n=" + std::to_string(n),
                                      lhs == rhs, lhs.get_str() + " vs " + rhs.get_str()});
            }
        }
    }
    return out;
}

inline SuiteResult run_linear_limit(const Budget&) {
    SuiteResult out{"linear-limit", {}};
    for (const std::string& spec : zoo_specs()) {
        ZooContext z(spec);
        for (unsigned n : {1u, 2u}) {
            auto [a, b, c] = linear_character_identity(z.G, z.table, z.classes, n);
            out.checks.push_back({spec + " n=" + std::to_string(n), a == b && b == c,
                                  a.get_str() + " / " + b.get_str() + " / " + c.get_str()});
        }
    }
    return out;
}

inline SuiteResult run_symfunc_theorem(const Budget& budget) {
    SuiteResult out{"symfunc-theorem", {}};
    struct Case {
        std::string text;
        unsigned rank;
        long hook_exponent;  // a_lambda = H_lambda^exponent
    };
    const std::vector<Case> cases = {{"x1^2", 1, 0}, {"x1^2 x2^2", 2, 1}, {"[x1,x2]", 2, 1}};
    for (const Case& c : cases) {
        for (unsigned n = 2; n <= 4; ++n) {
            Word gamma = parse_word(c.text, c.rank);
            PBasisVector lhs = word_power_sum_average(gamma, n, budget);
            PBasisVector rhs;
            rhs.weight = n;
            for (const Partition& lambda : partitions_of(n)) {
                PBasisVector s = schur_in_p(lambda);
                s *= rat_pow(Rational(hook_product(lambda)), c.hook_exponent);
                rhs += s;
            }
            out.checks.push_back({"gamma=" + c.text + " n=" + std::to_string(n), lhs == rhs,
                                  lhs == rhs ? "p-expansions agree"
                                             : lhs.str() + " vs " + rhs.str()});
        }
    }
    return out;
}

inline SuiteResult run_specialization(const Budget& budget) {
    SuiteResult out{"specialization", {}};
    for (long q : {1L, 2L, 3L}) {
        for (unsigned n = 1; n <= 5; ++n) {
            for (unsigned k : {1u, 2u}) {
                auto [lhs, rhs] =
                    specialized_identity_check(SpecializationKind::Squares, k, n, q, budget);
                out.checks.push_back({"squares k=" + std::to_string(k) + " n=" +
                                          std::to_string(n) + " q=" + std::to_string(q),
                                      lhs == rhs, lhs.get_str() + " vs " + rhs.get_str()});
            }
            auto [lhs, rhs] =
                specialized_identity_check(SpecializationKind::Commutators, 1, n, q, budget);
            out.checks.push_back({"commutators g=1 n=" + std::to_string(n) + " q=" +
                                      std::to_string(q),
                                  lhs == rhs, lhs.get_str() + " vs " + rhs.get_str()});
        }
    }
    return out;
}

inline SuiteResult run_genfun(const Budget&) {
    SuiteResult out{"genfun", {}};
    std::vector<BigInt> hooks = genfun_coefficients(0, 40);
    std::vector<BigInt> recurrence = pentagonal_partition_numbers(40);
    bool ok = hooks == recurrence;
    out.checks.push_back({"e=0 coefficients equal partition numbers for n<=40", ok,
                          ok ? "p(10)=" + hooks[10].get_str()
                             : "first mismatch among coefficients"});
    std::vector<BigInt> degrees = genfun_coefficients(1, 6);
    out.checks.push_back({"e=1 coefficient at n=3 sums the S_3 degrees", degrees[3] == 4,
                          degrees[3].get_str() + " vs 4"});
    std::vector<BigInt> squares = genfun_coefficients(2, 8);
    bool all_fact = true;
    for (unsigned n = 0; n <= 8; ++n) all_fact = all_fact && squares[n] == factorial(n);
    out.checks.push_back({"e=2 coefficients are n! for n<=8", all_fact,
                          all_fact ? "sum of squared degrees" : "mismatch"});
    return out;
}

}  // namespace detail

inline SuiteResult run_verify_suite(const std::string& name, const Budget& budget = {}) {
    if (name == "solomon") return detail::run_solomon(budget);
    if (name == "tuple-sum") return detail::run_tuple_sum(budget);
    if (name == "linear-limit") return detail::run_linear_limit(budget);
    if (name == "symfunc-theorem") return detail::run_symfunc_theorem(budget);
    if (name == "specialization") return detail::run_specialization(budget);
    if (name == "genfun") return detail::run_genfun(budget);
    throw Error("unknown verify suite '" + name + "'");
}

}  // namespace surfhom
