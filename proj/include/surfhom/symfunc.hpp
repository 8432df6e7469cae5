#pragma once

// Symmetric-function identities for the symmetric group: the characteristic
// map ch into the power-sum basis, Schur expansions through the
// Murnaghan-Nakayama characters, principal specializations at 1^q, and the
// generating function sum_n sum_{lambda |- n} (n!/H_lambda)^e x^n.

#include <map>
#include <utility>
#include <vector>

#include "surfhom/character_table.hpp"
#include "surfhom/class_function.hpp"
#include "surfhom/oracle.hpp"
#include "surfhom/partition.hpp"
#include "surfhom/surface_count.hpp"

namespace surfhom {

// An element of Lambda^n written in the power-sum basis p_mu.
struct PBasisVector {
    unsigned weight = 0;
    std::map<std::vector<unsigned>, Rational> coeffs;  // keyed by mu.parts, zero-free

    Rational coeff(const Partition& mu) const {
        auto it = coeffs.find(mu.parts);
        return it == coeffs.end() ? Rational(0) : it->second;
    }
    void set(const Partition& mu, Rational value) {
        value.canonicalize();
        if (value == 0)
            coeffs.erase(mu.parts);
        else
            coeffs[mu.parts] = std::move(value);
    }
    bool operator==(const PBasisVector&) const = default;

    PBasisVector& operator+=(const PBasisVector& o) {
        for (const auto& [mu, c] : o.coeffs) {
            auto& slot = coeffs[mu];
            slot += c;
            if (slot == 0) coeffs.erase(mu);
        }
        return *this;
    }
    PBasisVector& operator*=(const Rational& s) {
        if (s == 0) {
            coeffs.clear();
            return *this;
        }
        for (auto& [mu, c] : coeffs) c *= s;
        return *this;
    }

    std::string str() const {
        if (coeffs.empty()) return "0";
        std::string out;
        bool first = true;
        for (const auto& [mu, c] : coeffs) {
            Rational a = c;
            if (first) {
                if (a < 0) { out += "-"; a = -a; }
            } else {
                out += a < 0 ? " - " : " + ";
                if (a < 0) a = -a;
            }
            first = false;
            if (a != 1) out += a.get_str() + "*";
            out += "p" + Partition(std::vector<unsigned>(mu)).str();
        }
        return out;
    }
};

// <p_lambda, p_mu> = delta * z_lambda extended bilinearly (second slot conjugated
// is immaterial over rational coefficients).
inline Rational p_inner_product(const PBasisVector& a, const PBasisVector& b) {
    Rational acc(0);
    for (const auto& [mu, c] : a.coeffs) {
        auto it = b.coeffs.find(mu);
        if (it == b.coeffs.end()) continue;
        acc += c * it->second * Rational(centralizer_order(Partition(std::vector<unsigned>(mu))));
    }
    return acc;
}

namespace detail {

inline void require_symmetric_group(const FiniteGroup& G) {
    if (G.order() != factorial(static_cast<unsigned long>(G.degree())))
        throw NotSymmetricGroup("group is not a full symmetric group on its points");
}

inline std::vector<Partition> class_cycle_types(const FiniteGroup& G,
                                                const ConjugacyClassTable& classes) {
    std::vector<Partition> types;
    types.reserve(classes.count());
    for (std::size_t c = 0; c < classes.count(); ++c)
        types.push_back(cycle_type(G.element(classes.cls((int)c).representative)));
    return types;
}

}  // namespace detail

// ch(f) = (1/n!) sum_{w in S_n} f(w) p_{rho(w)}; the coefficient of p_mu is
// f(mu)/z_mu. Class-function values must be rational here.
inline PBasisVector ch(const ClassFunction& f) {
    detail::require_symmetric_group(f.group());
    const auto types = detail::class_cycle_types(f.group(), f.classes());
    PBasisVector out;
    out.weight = static_cast<unsigned>(f.group().degree());
    for (std::size_t c = 0; c < f.classes().count(); ++c) {
        Rational value = f.value((int)c).rational_value();
        out.set(types[c], value / Rational(centralizer_order(types[c])));
    }
    return out;
}

// s_lambda = sum_{mu |- n} chi^lambda(mu) p_mu / z_mu
inline PBasisVector schur_in_p(const Partition& lambda) {
    PBasisVector out;
    out.weight = lambda.weight();
    for (const Partition& mu : partitions_of(lambda.weight()))
        out.set(mu, Rational(static_cast<long>(symmetric_group_character(lambda, mu))) /
                        Rational(centralizer_order(mu)));
    return out;
}

// (1/n!) sum over assignments of p_{cycle type of gamma(...)}, from the
// classwise solution counts of the enumeration oracle.
inline PBasisVector word_power_sum_average(const Word& gamma, unsigned n,
                                           const Budget& budget = {}) {
    FiniteGroup G = build_group("builtin:sym:" + std::to_string(n),
                                std::max<std::size_t>(kDefaultOrderCap,
                                                      factorial(n).get_ui()));
    ConjugacyClassTable classes = conjugacy_classes(G);
    std::vector<BigInt> counts = oracle_class_counts(gamma, G, classes, budget);
    const auto types = detail::class_cycle_types(G, classes);
    PBasisVector out;
    out.weight = n;
    for (std::size_t c = 0; c < classes.count(); ++c)
        out.set(types[c], Rational(counts[c]) / Rational(centralizer_order(types[c])));
    return out;
}

// Left and right sides of the 1^q specialization identity:
//   (1/n!) sum q^{kappa(gamma(...))}  vs  sum_lambda H^{e} prod_t (q + c(t)),
// e = k-2 for k squares, 2g-2 for g commutator pairs.
enum class SpecializationKind { Squares, Commutators };

inline std::pair<Rational, Rational> specialized_identity_check(SpecializationKind kind,
                                                                unsigned param, unsigned n,
                                                                long q,
                                                                const Budget& budget = {}) {
    Word gamma = kind == SpecializationKind::Squares
                     ? surface_relator_word(SurfaceKind::Nonorientable, param)
                     : surface_relator_word(SurfaceKind::Orientable, param);
    PBasisVector avg = word_power_sum_average(gamma, n, budget);
    Rational lhs(0);
    for (const auto& [mu, c] : avg.coeffs)
        lhs += c * rat_pow(Rational(q), static_cast<long>(mu.size()));

    long e = kind == SpecializationKind::Squares ? static_cast<long>(param) - 2
                                                 : 2L * param - 2;
    Rational rhs(0);
    for (const Partition& lambda : partitions_of(n)) {
        Rational term = rat_pow(Rational(hook_product(lambda)), e);
        for (long c : contents(lambda)) term *= Rational(q + c);
        rhs += term;
    }
    return {lhs, rhs};
}

// Coefficients of sum_n sum_{lambda |- n} (n!/H_lambda)^e x^n for n = 0..N,
// N capped at 40 to keep the partition enumeration bounded. e = 0 recovers
// the partition numbers.
inline std::vector<BigInt> genfun_coefficients(long exponent, unsigned N) {
    if (exponent < 0) throw Error("genfun exponent must be nonnegative");
    if (N > 40) throw Error("genfun coefficient index is capped at 40");
    std::vector<BigInt> out;
    out.reserve(N + 1);
    for (unsigned n = 0; n <= N; ++n) {
        BigInt acc = 0;
        const BigInt nfact = factorial(n);
        for (const Partition& lambda : partitions_of(n)) {
            BigInt degree = nfact / hook_product(lambda);
            acc += int_pow(degree, static_cast<unsigned long>(exponent));
        }
        out.push_back(std::move(acc));
    }
    return out;
}

}  // namespace surfhom
