#pragma once

// Brute-force ground truth: exhaustive enumeration of word-equation solutions
// over G^r (optionally times prescribed conjugacy classes). Work is
// partitioned by slicing the first coordinate's range; per-worker counts are
// merged by summation, so results do not depend on the worker count.

#include <cstdint>
#include <thread>
#include <vector>

#include "surfhom/arith.hpp"
#include "surfhom/group.hpp"
#include "surfhom/word.hpp"

namespace surfhom {

struct Budget {
    BigInt max_tuples{100000000};
    unsigned workers = 1;
};

namespace detail {

// element^exponent for every element, one row per word letter
inline std::vector<std::vector<int>> letter_power_tables(const Word& w, const FiniteGroup& G) {
    std::vector<std::vector<int>> tables;
    tables.reserve(w.letters().size());
    for (const Letter& l : w.letters()) {
        std::vector<int> row(G.order());
        for (int g = 0; g < static_cast<int>(G.order()); ++g) row[g] = G.pow(g, l.exponent);
        tables.push_back(std::move(row));
    }
    return tables;
}

inline void check_budget(const BigInt& total, const Budget& budget) {
    if (total > budget.max_tuples)
        throw BudgetExceeded("enumeration of " + total.get_str() + " tuples exceeds budget " +
                             budget.max_tuples.get_str());
}

// Enumerates assignments of the word's generators (first coordinate
// restricted to [first_lo, first_hi)) times members of the boundary classes,
// and tallies the product word_value * c_1 ... c_n per resulting element.
inline void enumerate_range(const Word& w, const FiniteGroup& G,
                            const std::vector<std::vector<int>>& letter_pow,
                            const std::vector<const std::vector<int>*>& boundary_members,
                            std::size_t first_lo, std::size_t first_hi,
                            std::vector<std::uint64_t>& counts) {
    const unsigned r = w.rank();
    const std::size_t order = G.order();
    const std::size_t slots = r + boundary_members.size();
    if (slots == 0) {
        ++counts[static_cast<std::size_t>(G.identity())];
        return;
    }
    auto slot_size = [&](std::size_t s) {
        return s < r ? order : boundary_members[s - r]->size();
    };
    auto slot_element = [&](std::size_t s, std::size_t idx) {
        return s < r ? static_cast<int>(idx) : (*boundary_members[s - r])[idx];
    };

    std::vector<std::size_t> odo(slots, 0);
    odo[0] = first_lo;
    if (first_lo >= first_hi) return;

    const auto& letters = w.letters();
    while (true) {
        int value = G.identity();
        for (std::size_t l = 0; l < letters.size(); ++l)
            value = G.mul(value, letter_pow[l][static_cast<std::size_t>(
                                     odo[letters[l].generator - 1])]);
        for (std::size_t b = 0; b < boundary_members.size(); ++b)
            value = G.mul(value, slot_element(r + b, odo[r + b]));
        ++counts[static_cast<std::size_t>(value)];

        std::size_t s = slots;
        while (s-- > 0) {
            ++odo[s];
            if (odo[s] < (s == 0 ? first_hi : slot_size(s))) break;
            if (s == 0) return;
            odo[s] = 0;
        }
    }
}

// Per-element tallies of word * boundary products, parallel over the first slot.
inline std::vector<BigInt> enumerate_counts(const Word& w, const FiniteGroup& G,
                                            const std::vector<const std::vector<int>*>& boundary,
                                            const Budget& budget) {
    BigInt total = int_pow(BigInt(static_cast<unsigned long>(G.order())), w.rank());
    for (const auto* members : boundary) total *= static_cast<unsigned long>(members->size());
    check_budget(total, budget);

    const auto letter_pow = detail::letter_power_tables(w, G);
    const std::size_t first_range =
        w.rank() > 0 ? G.order() : (boundary.empty() ? 1 : boundary[0]->size());
    // with rank 0 the first slot is the first boundary class (or a single
    // empty assignment), so reuse the same partitioning
    unsigned workers = std::max(1u, budget.workers);
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(first_range, 1)));

    std::vector<std::vector<std::uint64_t>> partial(workers,
                                                    std::vector<std::uint64_t>(G.order(), 0));
    if (workers == 1) {
        enumerate_range(w, G, letter_pow, boundary, 0, first_range, partial[0]);
    } else {
        std::vector<std::thread> threads;
        for (unsigned t = 0; t < workers; ++t) {
            std::size_t lo = first_range * t / workers;
            std::size_t hi = first_range * (t + 1) / workers;
            threads.emplace_back([&, t, lo, hi] {
                enumerate_range(w, G, letter_pow, boundary, lo, hi, partial[t]);
            });
        }
        for (auto& th : threads) th.join();
    }

    std::vector<BigInt> counts(G.order(), BigInt(0));
    for (const auto& part : partial)
        for (std::size_t i = 0; i < part.size(); ++i)
            counts[i] += static_cast<unsigned long>(part[i]);
    return counts;
}

}  // namespace detail

// Per-element solution counts f_gamma(w) = #{assignments with gamma(...) = w}.
inline std::vector<BigInt> oracle_element_counts(const Word& w, const FiniteGroup& G,
                                                 const Budget& budget = {}) {
    return detail::enumerate_counts(w, G, {}, budget);
}

// #{(g_1..g_r, c_1..c_n) : gamma(g) c_1 ... c_n = 1}
inline BigInt oracle_count_with_boundary(const Word& w, const FiniteGroup& G,
                                         const ConjugacyClassTable& classes,
                                         const std::vector<int>& boundary,
                                         const Budget& budget = {}) {
    std::vector<const std::vector<int>*> members;
    members.reserve(boundary.size());
    for (int cls : boundary) members.push_back(&classes.cls(cls).members);
    return detail::enumerate_counts(w, G, members, budget)[static_cast<std::size_t>(G.identity())];
}

// Classwise counts as exact integers; constancy on classes is checked, not
// assumed (the enumeration yields every element's count anyway).
inline std::vector<BigInt> oracle_class_counts(const Word& w, const FiniteGroup& G,
                                               const ConjugacyClassTable& classes,
                                               const Budget& budget = {}) {
    std::vector<BigInt> per_element = oracle_element_counts(w, G, budget);
    std::vector<BigInt> out;
    out.reserve(classes.count());
    for (std::size_t c = 0; c < classes.count(); ++c) {
        const ConjugacyClass& cc = classes.cls(static_cast<int>(c));
        const BigInt& ref = per_element[static_cast<std::size_t>(cc.representative)];
        for (int m : cc.members)
            if (per_element[static_cast<std::size_t>(m)] != ref)
                throw Error("oracle counts are not constant on a conjugacy class");
        out.push_back(ref);
    }
    return out;
}

// Per-class counts of n-th roots: #{x : x^n = rep(C)}.
inline std::vector<BigInt> oracle_nth_root_counts(const FiniteGroup& G,
                                                  const ConjugacyClassTable& classes, long long n) {
    std::vector<BigInt> per_element(G.order(), BigInt(0));
    for (int x = 0; x < static_cast<int>(G.order()); ++x)
        per_element[static_cast<std::size_t>(G.pow(x, n))] += 1;
    std::vector<BigInt> out;
    out.reserve(classes.count());
    for (std::size_t c = 0; c < classes.count(); ++c)
        out.push_back(per_element[static_cast<std::size_t>(classes.cls((int)c).representative)]);
    return out;
}

}  // namespace surfhom
