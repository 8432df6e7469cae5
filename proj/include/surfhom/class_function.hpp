#pragma once

// Class-function algebra over a fixed group: inner products, expansion
// coefficients a_chi over the irreducible characters, the closed-form
// coefficient vectors for the special word families, and convolution both by
// the character product rule and by direct double summation.

#include <vector>

#include "surfhom/character_table.hpp"
#include "surfhom/cyclotomic.hpp"
#include "surfhom/group.hpp"
#include "surfhom/oracle.hpp"
#include "surfhom/word.hpp"

namespace surfhom {

class ClassFunction {
public:
    ClassFunction(const FiniteGroup& G, const ConjugacyClassTable& classes,
                  std::vector<Cyclotomic> values)
        : group_(&G), classes_(&classes), values_(std::move(values)) {}

    const FiniteGroup& group() const { return *group_; }
    const ConjugacyClassTable& classes() const { return *classes_; }
    const Cyclotomic& value(int cls) const { return values_[static_cast<std::size_t>(cls)]; }
    const Cyclotomic& at_element(int g) const {
        return values_[static_cast<std::size_t>(classes_->class_of(g))];
    }
    std::size_t size() const { return values_.size(); }
    bool operator==(const ClassFunction& o) const {
        return group_ == o.group_ && values_ == o.values_;
    }

private:
    const FiniteGroup* group_;
    const ConjugacyClassTable* classes_;
    std::vector<Cyclotomic> values_;
};

namespace detail {
inline void require_same_group(const ClassFunction& a, const ClassFunction& b) {
    if (&a.group() != &b.group())
        throw GroupMismatch("class functions live on different groups");
}
}  // namespace detail

// <f1, f2> = (1/|G|) sum_g f1(g) conj(f2(g)), summed classwise with |C| weights.
inline Cyclotomic inner_product(const ClassFunction& f1, const ClassFunction& f2) {
    detail::require_same_group(f1, f2);
    const auto& classes = f1.classes();
    Cyclotomic acc = Cyclotomic::zero(static_cast<unsigned>(f1.group().exponent()));
    for (std::size_t c = 0; c < classes.count(); ++c)
        acc += f1.value((int)c) * f2.value((int)c).conj() *
               Rational(static_cast<unsigned long>(classes.cls((int)c).size()));
    acc /= Rational(static_cast<unsigned long>(f1.group().order()));
    return acc;
}

// the character chi as a class function
inline ClassFunction character_function(const CharacterTable& table, int chi) {
    std::vector<Cyclotomic> values;
    values.reserve(table.classes().count());
    for (std::size_t c = 0; c < table.classes().count(); ++c)
        values.push_back(table.value(chi, (int)c));
    return ClassFunction(table.group(), table.classes(), std::move(values));
}

// one a_chi per irreducible character, in canonical character order
using CoefficientVector = std::vector<Cyclotomic>;

inline CoefficientVector coefficients_from_class_function(const ClassFunction& f,
                                                          const CharacterTable& table) {
    CoefficientVector out;
    out.reserve(table.size());
    for (std::size_t chi = 0; chi < table.size(); ++chi)
        out.push_back(inner_product(f, character_function(table, (int)chi)));
    return out;
}

// f = sum_chi a_chi chi
inline ClassFunction synthesize(const CharacterTable& table, const CoefficientVector& coeffs) {
    std::vector<Cyclotomic> values;
    const std::size_t n = table.classes().count();
    values.reserve(n);
    for (std::size_t c = 0; c < n; ++c) {
        Cyclotomic v = Cyclotomic::zero(table.conductor());
        for (std::size_t chi = 0; chi < table.size(); ++chi)
            v += coeffs[chi] * table.value((int)chi, (int)c);
        values.push_back(std::move(v));
    }
    return ClassFunction(table.group(), table.classes(), std::move(values));
}

// Closed-form coefficient vectors:
//   squares        a_chi = nu(chi)^k (|G|/d)^{k-1}
//   commutators    a_chi = (|G|/d)^{2g-1}
//   generalized    per block |G|^{m-1} / d^{m - eps_m}, eps_m = 1 for even m
//                  and 2 for odd m, blocks combined by the product rule
//   powers         a_chi = (|G|/d)^{m-1} prod_i nu_{n_i}(chi)
// The vectors are for the word living in the free group on exactly its own
// letters; see word_coefficients for rank adjustment.
inline CoefficientVector closed_form_coefficients(const WordShape& shape,
                                                  const CharacterTable& table) {
    if (shape.kind == WordShape::Kind::Generic)
        throw GenericShape("no closed form for a generic word");
    const Rational order(static_cast<unsigned long>(table.group().order()));
    const unsigned e = table.conductor();
    CoefficientVector out;
    out.reserve(table.size());
    for (std::size_t chi = 0; chi < table.size(); ++chi) {
        const Rational d(static_cast<unsigned long>(table.degree((int)chi)));
        Rational a;
        switch (shape.kind) {
            case WordShape::Kind::ProductOfSquares: {
                int nu = table.fs_indicator((int)chi);
                long k = shape.count;
                Rational sign(nu == 0 ? 0 : (nu == 1 || k % 2 == 0 ? 1 : -1));
                a = sign * rat_pow(order / d, k - 1);
                break;
            }
            case WordShape::Kind::ProductOfCommutators:
                a = rat_pow(order / d, 2L * shape.count - 1);
                break;
            case WordShape::Kind::GeneralizedCommutatorProduct: {
                a = rat_pow(order / d, static_cast<long>(shape.block_sizes.size()) - 1);
                for (unsigned m : shape.block_sizes) {
                    long eps = m % 2 == 0 ? 1 : 2;
                    a *= rat_pow(order, m - 1) / rat_pow(d, static_cast<long>(m) - eps);
                }
                break;
            }
            case WordShape::Kind::PowerProduct: {
                a = rat_pow(order / d, static_cast<long>(shape.exponents.size()) - 1);
                for (long nexp : shape.exponents)
                    a *= Rational(generalized_indicator(table, (int)chi, nexp));
                break;
            }
            case WordShape::Kind::Generic:
                break;  // unreachable
        }
        out.push_back(Cyclotomic::rational(e, a));
    }
    return out;
}

// f_gamma as an exact class function straight from the enumeration oracle.
inline ClassFunction oracle_class_function(const Word& w, const FiniteGroup& G,
                                           const ConjugacyClassTable& classes,
                                           const Budget& budget = {}) {
    std::vector<BigInt> counts = oracle_class_counts(w, G, classes, budget);
    std::vector<Cyclotomic> values;
    values.reserve(counts.size());
    const unsigned e = static_cast<unsigned>(G.exponent());
    for (const BigInt& c : counts) values.push_back(Cyclotomic::integer(e, c));
    return ClassFunction(G, classes, std::move(values));
}

// Coefficient vector of f_gamma for a word of explicit rank r: closed forms
// when the shape allows, otherwise the enumeration oracle. A word using only
// s of its r generators counts each solution |G|^{r-s} times, so the closed
// forms are scaled accordingly.
inline CoefficientVector word_coefficients(const Word& w, const CharacterTable& table,
                                           const Budget& budget = {}) {
    WordShape shape = recognize_shape(w);
    if (shape.kind == WordShape::Kind::Generic) {
        ClassFunction f =
            oracle_class_function(w, table.group(), table.classes(), budget);
        return coefficients_from_class_function(f, table);
    }
    CoefficientVector coeffs = closed_form_coefficients(shape, table);
    unsigned unused = w.rank() - w.generators_used();
    if (unused > 0) {
        Rational scale = rat_pow(Rational(static_cast<unsigned long>(table.group().order())),
                                 static_cast<long>(unused));
        for (Cyclotomic& a : coeffs) a *= scale;
    }
    return coeffs;
}

// F(w) = sum_{u_1 ... u_m = w} f_1(u_1) ... f_m(u_m), computed through the
// character expansion <F, chi> = (|G|/d)^{m-1} prod <f_i, chi>.
inline ClassFunction convolution(const std::vector<ClassFunction>& fs,
                                 const CharacterTable& table) {
    if (fs.empty()) throw Error("convolution of an empty list");
    for (const ClassFunction& f : fs) {
        if (&f.group() != &table.group())
            throw GroupMismatch("class function does not live on the table's group");
    }
    const Rational order(static_cast<unsigned long>(table.group().order()));
    CoefficientVector coeffs;
    coeffs.reserve(table.size());
    for (std::size_t chi = 0; chi < table.size(); ++chi) {
        const Rational d(static_cast<unsigned long>(table.degree((int)chi)));
        Cyclotomic a =
            Cyclotomic::rational(table.conductor(),
                                 rat_pow(order / d, static_cast<long>(fs.size()) - 1));
        for (const ClassFunction& f : fs)
            a *= inner_product(f, character_function(table, (int)chi));
        coeffs.push_back(std::move(a));
    }
    return synthesize(table, coeffs);
}

// Direct double-sum route, O(|G|^2); the test oracle for the expansion path.
inline ClassFunction convolution_direct(const ClassFunction& f1, const ClassFunction& f2) {
    detail::require_same_group(f1, f2);
    const FiniteGroup& G = f1.group();
    const ConjugacyClassTable& classes = f1.classes();
    std::vector<Cyclotomic> values;
    values.reserve(classes.count());
    for (std::size_t c = 0; c < classes.count(); ++c) {
        int w = classes.cls((int)c).representative;
        Cyclotomic acc = Cyclotomic::zero(static_cast<unsigned>(G.exponent()));
        for (int u = 0; u < static_cast<int>(G.order()); ++u)
            acc += f1.at_element(u) * f2.at_element(G.mul(G.inv(u), w));
        values.push_back(std::move(acc));
    }
    return ClassFunction(G, classes, std::move(values));
}

// Solomon: |G| divides f_gamma(1) whenever the rank exceeds 1.
inline bool solomon_check(const Word& w, const FiniteGroup& G, const Budget& budget = {}) {
    if (w.rank() <= 1) throw RankMismatch("solomon check needs rank > 1");
    BigInt f1 = oracle_element_counts(w, G, budget)[static_cast<std::size_t>(G.identity())];
    return divides(BigInt(static_cast<unsigned long>(G.order())), f1);
}

}  // namespace surfhom
