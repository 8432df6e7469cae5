#pragma once

// Integer partitions and their Young-diagram statistics: hook lengths,
// contents, centralizer orders z_mu, conjugation, cycle types.

#include <algorithm>
#include <vector>

#include "surfhom/arith.hpp"
#include "surfhom/permutation.hpp"

namespace surfhom {

struct Partition {
    std::vector<unsigned> parts;  // weakly decreasing, all >= 1

    Partition() = default;
    explicit Partition(std::vector<unsigned> p) : parts(std::move(p)) {
        std::sort(parts.begin(), parts.end(), std::greater<unsigned>());
        while (!parts.empty() && parts.back() == 0) parts.pop_back();
    }

    unsigned weight() const {
        unsigned n = 0;
        for (unsigned p : parts) n += p;
        return n;
    }
    std::size_t length() const { return parts.size(); }
    bool empty() const { return parts.empty(); }

    bool operator==(const Partition& o) const = default;
    // plain lexicographic on the descending part lists
    bool operator<(const Partition& o) const { return parts < o.parts; }

    std::string str() const {
        std::string out = "(";
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(parts[i]);
        }
        return out + ")";
    }
};

inline Partition conjugate(const Partition& lambda) {
    std::vector<unsigned> out;
    if (lambda.empty()) return Partition{};
    out.resize(lambda.parts[0], 0);
    for (unsigned p : lambda.parts)
        for (unsigned j = 0; j < p; ++j) ++out[j];
    return Partition(std::move(out));
}

// All partitions of n, listed in reverse lexicographic order: (n) first,
// (1,...,1) last.
inline std::vector<Partition> partitions_of(unsigned n) {
    std::vector<Partition> out;
    if (n == 0) {
        out.push_back(Partition{});
        return out;
    }
    std::vector<unsigned> cur;
    auto rec = [&](auto&& self, unsigned remaining, unsigned max_part) -> void {
        if (remaining == 0) {
            out.push_back(Partition(std::vector<unsigned>(cur)));
            return;
        }
        for (unsigned p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            self(self, remaining - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

inline BigInt hook_product(const Partition& lambda) {
    Partition conj = conjugate(lambda);
    BigInt h = 1;
    for (std::size_t i = 0; i < lambda.parts.size(); ++i)
        for (unsigned j = 0; j < lambda.parts[i]; ++j)
            h *= static_cast<unsigned long>(lambda.parts[i] - j + conj.parts[j] - i - 1);
    return h;
}

// content j - i per cell (i, j), row-major
inline std::vector<long> contents(const Partition& lambda) {
    std::vector<long> out;
    for (std::size_t i = 0; i < lambda.parts.size(); ++i)
        for (unsigned j = 0; j < lambda.parts[i]; ++j)
            out.push_back(static_cast<long>(j) - static_cast<long>(i));
    return out;
}

// z_mu = prod_i i^{m_i} m_i!, the centralizer order of a permutation of cycle
// type mu; n!/z_mu is the class size.
inline BigInt centralizer_order(const Partition& mu) {
    BigInt z = 1;
    unsigned i = 0;
    while (i < mu.parts.size()) {
        unsigned j = i;
        while (j < mu.parts.size() && mu.parts[j] == mu.parts[i]) ++j;
        unsigned long mult = j - i;
        z *= int_pow(BigInt(static_cast<unsigned long>(mu.parts[i])), mult) * factorial(mult);
        i = j;
    }
    return z;
}

// cycle type including fixed points, e.g. (1 2) in S4 has type (2,1,1)
inline Partition cycle_type(const Permutation& p) {
    std::vector<unsigned> lens;
    std::vector<bool> seen(p.degree(), false);
    for (std::size_t s = 0; s < p.degree(); ++s) {
        if (seen[s]) continue;
        unsigned len = 0;
        std::uint32_t pt = static_cast<std::uint32_t>(s);
        while (!seen[pt]) {
            seen[pt] = true;
            pt = p(pt);
            ++len;
        }
        lens.push_back(len);
    }
    return Partition(std::move(lens));
}

}  // namespace surfhom
