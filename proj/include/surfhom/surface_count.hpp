#pragma once

// Homomorphism counts from surface groups into a finite group, with
// prescribed boundary conjugacy classes:
//
//   orientable     |G|^{2g-1} |C_1|..|C_n| sum_chi chi(C_1)..chi(C_n) / d^{n+2g-2}
//   nonorientable  |G|^{k-1}  |C_1|..|C_n| sum_chi nu^k chi(C_1)..chi(C_n) / d^{n+k-2}
//
// n = 0 gives the closed-surface counts. The general engine handles an
// arbitrary word relator through its coefficient vector:
//
//   |C_1|..|C_n| sum_chi a_{conj(chi)} d^{1-n} chi(C_1)..chi(C_n)
//
// Every count must reduce to a nonnegative rational integer; anything else
// is an arithmetic bug and throws.

#include <utility>
#include <vector>

#include "surfhom/class_function.hpp"

namespace surfhom {

enum class SurfaceKind { Orientable, Nonorientable };

struct SurfaceSpec {
    SurfaceKind kind = SurfaceKind::Orientable;
    unsigned genus = 0;          // g >= 0 orientable, k >= 1 nonorientable
    std::vector<int> boundary;   // conjugacy class indices, ordered, repeats allowed
};

struct HomCount {
    BigInt value;
    std::vector<Cyclotomic> terms;  // per-character summands, canonical order
};

namespace detail {

inline BigInt boundary_size_product(const ConjugacyClassTable& classes,
                                    const std::vector<int>& boundary) {
    BigInt prod = 1;
    for (int cls : boundary) prod *= static_cast<unsigned long>(classes.cls(cls).size());
    return prod;
}

inline HomCount reduce_terms(std::vector<Cyclotomic> terms, unsigned conductor) {
    Cyclotomic total = Cyclotomic::zero(conductor);
    for (const Cyclotomic& t : terms) total += t;
    if (!total.is_rational_integer())
        throw NonIntegerResult("character sum did not reduce to an integer: " + total.str());
    BigInt value = total.integer_value();
    if (value < 0)
        throw NonIntegerResult("character sum reduced to a negative count: " + value.get_str());
    return HomCount{std::move(value), std::move(terms)};
}

}  // namespace detail

// The product-of-commutators (resp. product-of-squares) part of the surface
// group relator, as a word in F_{2g} (resp. F_k). Oracle comparisons
// enumerate solutions of this word times the boundary classes.
inline Word surface_relator_word(SurfaceKind kind, unsigned genus) {
    std::vector<Letter> letters;
    if (kind == SurfaceKind::Orientable) {
        for (unsigned i = 0; i < genus; ++i) {
            unsigned a = 2 * i + 1, b = 2 * i + 2;
            letters.push_back({a, 1});
            letters.push_back({b, 1});
            letters.push_back({a, -1});
            letters.push_back({b, -1});
        }
        return Word(2 * genus, std::move(letters));
    }
    for (unsigned i = 1; i <= genus; ++i) letters.push_back({i, 2});
    return Word(genus, std::move(letters));
}

inline HomCount count_surface(const FiniteGroup& G, const CharacterTable& table,
                              const ConjugacyClassTable& classes, SurfaceKind kind,
                              unsigned genus, const std::vector<int>& boundary) {
    if (kind == SurfaceKind::Nonorientable && genus < 1)
        throw Error("nonorientable genus must be at least 1");
    const long n = static_cast<long>(boundary.size());
    const long handles = kind == SurfaceKind::Orientable ? 2L * genus : static_cast<long>(genus);
    const Rational order(static_cast<unsigned long>(G.order()));
    const Rational prefactor =
        rat_pow(order, handles - 1) * Rational(detail::boundary_size_product(classes, boundary));

    std::vector<Cyclotomic> terms;
    terms.reserve(table.size());
    for (std::size_t chi = 0; chi < table.size(); ++chi) {
        Rational scalar = prefactor;
        if (kind == SurfaceKind::Nonorientable) {
            int nu = table.fs_indicator((int)chi);
            long k = genus;
            if (nu == 0) scalar = 0;
            else if (nu == -1 && k % 2 == 1) scalar = -scalar;
        }
        scalar *= rat_pow(Rational(static_cast<unsigned long>(table.degree((int)chi))),
                          -(n + handles - 2));
        Cyclotomic term = Cyclotomic::rational(table.conductor(), scalar);
        for (int cls : boundary) term *= table.value((int)chi, cls);
        terms.push_back(std::move(term));
    }
    return detail::reduce_terms(std::move(terms), table.conductor());
}

inline HomCount count_surface(const FiniteGroup& G, const CharacterTable& table,
                              const ConjugacyClassTable& classes, const SurfaceSpec& spec) {
    return count_surface(G, table, classes, spec.kind, spec.genus, spec.boundary);
}

inline HomCount count_closed_orientable(const FiniteGroup& G, const CharacterTable& table,
                                        unsigned g) {
    return count_surface(G, table, table.classes(), SurfaceKind::Orientable, g, {});
}

inline HomCount count_closed_nonorientable(const FiniteGroup& G, const CharacterTable& table,
                                           unsigned k) {
    return count_surface(G, table, table.classes(), SurfaceKind::Nonorientable, k, {});
}

inline HomCount count_bounded_orientable(const FiniteGroup& G, const CharacterTable& table,
                                         const ConjugacyClassTable& classes, unsigned g,
                                         const std::vector<int>& boundary) {
    return count_surface(G, table, classes, SurfaceKind::Orientable, g, boundary);
}

inline HomCount count_bounded_nonorientable(const FiniteGroup& G, const CharacterTable& table,
                                            const ConjugacyClassTable& classes, unsigned k,
                                            const std::vector<int>& boundary) {
    return count_surface(G, table, classes, SurfaceKind::Nonorientable, k, boundary);
}

// #{(g_1..g_r, c_1..c_n) : gamma(g) c_1...c_n = 1} through the coefficient
// vector of gamma (closed form when shaped, oracle-assisted otherwise).
inline HomCount count_general(const Word& gamma, const FiniteGroup& G,
                              const CharacterTable& table, const ConjugacyClassTable& classes,
                              const std::vector<int>& boundary, const Budget& budget = {}) {
    if (&table.group() != &G)
        throw GroupMismatch("character table belongs to a different group");
    const long n = static_cast<long>(boundary.size());
    const CoefficientVector coeffs = word_coefficients(gamma, table, budget);
    const Rational class_prod(detail::boundary_size_product(classes, boundary));

    std::vector<Cyclotomic> terms;
    terms.reserve(table.size());
    for (std::size_t chi = 0; chi < table.size(); ++chi) {
        const Cyclotomic& a_conj = coeffs[static_cast<std::size_t>(table.conjugate_character((int)chi))];
        Rational scalar = class_prod *
                          rat_pow(Rational(static_cast<unsigned long>(table.degree((int)chi))), 1 - n);
        Cyclotomic term = a_conj * scalar;
        for (int cls : boundary) term *= table.value((int)chi, cls);
        terms.push_back(std::move(term));
    }
    return detail::reduce_terms(std::move(terms), table.conductor());
}

// Bounded counts normalized by |G|^{2g-1} (or |G|^{k-1}) sum to |G|^n over
// all ordered n-tuples of classes, because the bounded surface groups are
// free. Returns (normalized sum, |G|^n).
inline std::pair<BigInt, BigInt> tuple_sum_identity(const FiniteGroup& G,
                                                    const CharacterTable& table,
                                                    const ConjugacyClassTable& classes,
                                                    SurfaceKind kind, unsigned genus, unsigned n) {
    if (n < 1) throw Error("tuple_sum_identity needs n >= 1");
    const long handles = kind == SurfaceKind::Orientable ? 2L * genus : static_cast<long>(genus);
    Cyclotomic acc = Cyclotomic::zero(table.conductor());
    std::vector<int> tuple(n, 0);
    while (true) {
        HomCount c = count_surface(G, table, classes, kind, genus, tuple);
        Cyclotomic normalized = Cyclotomic::integer(table.conductor(), c.value) *
                                rat_pow(Rational(static_cast<unsigned long>(G.order())),
                                        -(handles - 1));
        acc += normalized;
        std::size_t s = n;
        bool done = true;
        while (s-- > 0) {
            if (++tuple[s] < static_cast<int>(classes.count())) { done = false; break; }
            tuple[s] = 0;
        }
        if (done) break;
    }
    if (!acc.is_rational_integer())
        throw NonIntegerResult("tuple sum did not reduce to an integer");
    return {acc.integer_value(), int_pow(BigInt(static_cast<unsigned long>(G.order())), n)};
}

// In the large-genus limit only linear characters survive, and a linear
// character never has nu = -1: |G|^n equals the class-tuple sums restricted
// to linear characters, and to linear characters with nu = 1.
// Returns (|G|^n, linear sum, linear-with-nu-1 sum).
inline std::tuple<BigInt, BigInt, BigInt> linear_character_identity(
    const FiniteGroup& G, const CharacterTable& table, const ConjugacyClassTable& classes,
    unsigned n) {
    if (n < 1) throw Error("linear_character_identity needs n >= 1");
    auto restricted_sum = [&](bool require_fs_one) {
        Cyclotomic acc = Cyclotomic::zero(table.conductor());
        std::vector<int> tuple(n, 0);
        while (true) {
            Rational class_prod(detail::boundary_size_product(classes, tuple));
            for (std::size_t chi = 0; chi < table.size(); ++chi) {
                if (table.degree((int)chi) != 1) continue;
                if (require_fs_one && table.fs_indicator((int)chi) != 1) continue;
                Cyclotomic term = Cyclotomic::rational(table.conductor(), class_prod);
                for (int cls : tuple) term *= table.value((int)chi, cls);
                acc += term;
            }
            std::size_t s = n;
            bool done = true;
            while (s-- > 0) {
                if (++tuple[s] < static_cast<int>(classes.count())) { done = false; break; }
                tuple[s] = 0;
            }
            if (done) break;
        }
        if (!acc.is_rational_integer())
            throw NonIntegerResult("linear character sum did not reduce to an integer");
        return acc.integer_value();
    };
    return {int_pow(BigInt(static_cast<unsigned long>(G.order())), n), restricted_sum(false),
            restricted_sum(true)};
}

// True iff the count is unchanged under the given reordering of the boundary
// (both kinds) and, for nonorientable surfaces, under replacing every class
// by its inverse class.
inline bool reorder_and_invert_invariance(const FiniteGroup& G, const CharacterTable& table,
                                          const ConjugacyClassTable& classes, SurfaceKind kind,
                                          unsigned genus, const std::vector<int>& boundary,
                                          const std::vector<std::size_t>& permutation) {
    HomCount base = count_surface(G, table, classes, kind, genus, boundary);
    std::vector<int> reordered(boundary.size());
    for (std::size_t i = 0; i < boundary.size(); ++i)
        reordered[i] = boundary[permutation[i]];
    if (count_surface(G, table, classes, kind, genus, reordered).value != base.value)
        return false;
    if (kind == SurfaceKind::Nonorientable) {
        std::vector<int> inverted;
        inverted.reserve(boundary.size());
        for (int cls : boundary) inverted.push_back(classes.inverse_class(G, cls));
        if (count_surface(G, table, classes, kind, genus, inverted).value != base.value)
            return false;
    }
    return true;
}

}  // namespace surfhom
