#pragma once

// Permutations of {0,...,m-1}, the carrier for all group elements.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "surfhom/errors.hpp"

namespace surfhom {

class Permutation {
public:
    Permutation() = default;

    explicit Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
        std::vector<bool> seen(images_.size(), false);
        for (std::uint32_t img : images_) {
            if (img >= images_.size() || seen[img])
                throw InvalidPermutation("images are not a bijection on {0,...,m-1}");
            seen[img] = true;
        }
    }

    static Permutation identity(std::size_t degree) {
        Permutation p;
        p.images_.resize(degree);
        std::iota(p.images_.begin(), p.images_.end(), 0u);
        return p;
    }

    std::size_t degree() const { return images_.size(); }
    std::uint32_t operator()(std::uint32_t point) const { return images_[point]; }
    const std::vector<std::uint32_t>& images() const { return images_; }

    // (this ∘ other)(x) = this(other(x))
    Permutation compose(const Permutation& other) const {
        Permutation out;
        out.images_.resize(images_.size());
        for (std::size_t i = 0; i < images_.size(); ++i)
            out.images_[i] = images_[other.images_[i]];
        return out;
    }

    Permutation inverse() const {
        Permutation out;
        out.images_.resize(images_.size());
        for (std::size_t i = 0; i < images_.size(); ++i)
            out.images_[images_[i]] = static_cast<std::uint32_t>(i);
        return out;
    }

    bool is_identity() const {
        for (std::size_t i = 0; i < images_.size(); ++i)
            if (images_[i] != i) return false;
        return true;
    }

    // Same permutation acting on a larger point set, new points fixed.
    Permutation extended(std::size_t degree) const {
        Permutation out = identity(degree);
        for (std::size_t i = 0; i < images_.size(); ++i) out.images_[i] = images_[i];
        return out;
    }

    bool operator==(const Permutation& o) const = default;
    auto operator<=>(const Permutation& o) const = default;

    // Cycle notation with 1-based points: "(1 2 3)(4 5)"; identity prints "()".
    std::string cycle_string() const {
        std::string out;
        std::vector<bool> seen(images_.size(), false);
        for (std::size_t start = 0; start < images_.size(); ++start) {
            if (seen[start] || images_[start] == start) continue;
            out += '(';
            std::uint32_t pt = static_cast<std::uint32_t>(start);
            bool first = true;
            while (!seen[pt]) {
                seen[pt] = true;
                if (!first) out += ' ';
                out += std::to_string(pt + 1);
                first = false;
                pt = images_[pt];
            }
            out += ')';
        }
        if (out.empty()) out = "()";
        return out;
    }

    // Parses "(1 2 3)(4 5)". Points are 1-based and capped at 64. Cycles are
    // applied right to left, matching compose(). min_degree pads fixed points.
    static Permutation parse_cycles(std::string_view text, std::size_t min_degree = 0) {
        std::vector<std::vector<std::uint32_t>> cycles;
        std::size_t i = 0, n = text.size();
        std::uint32_t max_point = 0;
        auto skip_ws = [&] { while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
        skip_ws();
        while (i < n) {
            if (text[i] != '(') throw InvalidPermutation("expected '(' in cycle notation");
            ++i;
            std::vector<std::uint32_t> cyc;
            skip_ws();
            while (i < n && text[i] != ')') {
                if (!std::isdigit(static_cast<unsigned char>(text[i])))
                    throw InvalidPermutation("expected point number in cycle notation");
                std::uint64_t v = 0;
                while (i < n && std::isdigit(static_cast<unsigned char>(text[i])))
                    v = v * 10 + static_cast<std::uint64_t>(text[i++] - '0');
                if (v == 0 || v > 64) throw InvalidPermutation("points must be in 1..64");
                cyc.push_back(static_cast<std::uint32_t>(v - 1));
                max_point = std::max(max_point, static_cast<std::uint32_t>(v));
                skip_ws();
            }
            if (i == n) throw InvalidPermutation("unterminated cycle");
            ++i;  // ')'
            if (!cyc.empty()) cycles.push_back(std::move(cyc));
            skip_ws();
        }
        std::size_t degree = std::max<std::size_t>(max_point, std::max<std::size_t>(min_degree, 1));
        Permutation out = identity(degree);
        for (auto it = cycles.rbegin(); it != cycles.rend(); ++it) {
            const auto& cyc = *it;
            std::vector<bool> used(degree, false);
            for (std::uint32_t pt : cyc) {
                if (used[pt]) throw InvalidPermutation("repeated point within a cycle");
                used[pt] = true;
            }
            Permutation c = identity(degree);
            for (std::size_t k = 0; k < cyc.size(); ++k)
                c.images_[cyc[k]] = cyc[(k + 1) % cyc.size()];
            out = c.compose(out);
        }
        return out;
    }

private:
    std::vector<std::uint32_t> images_;
};

struct PermutationHash {
    std::size_t operator()(const Permutation& p) const {
        std::size_t h = 1469598103934665603ull;
        for (std::uint32_t v : p.images()) {
            h ^= v;
            h *= 1099511628211ull;
        }
        return h;
    }
};

}  // namespace surfhom
