#pragma once

// Words in a free group F_r, parsed from a small text DSL:
//   atoms      x1, x2, ...            (1-based generator indices)
//   powers     x1^3, x2^-2
//   products   juxtaposition, e.g. "x1^2 x2^2"
//   brackets   [a,b,...] = a b ... a^-1 b^-1 ...   (nesting allowed)
// Words are stored freely reduced. The rank is always explicit: the same
// letters denote different counting problems in F_1 and F_2.

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "surfhom/errors.hpp"
#include "surfhom/group.hpp"

namespace surfhom {

struct Letter {
    unsigned generator;  // 1-based
    long exponent;       // nonzero
    bool operator==(const Letter&) const = default;
};

class Word {
public:
    Word() = default;
    Word(unsigned rank, std::vector<Letter> letters) : rank_(rank) {
        for (const Letter& l : letters) append(l.generator, l.exponent);
    }

    static Word empty(unsigned rank) { return Word(rank, {}); }

    unsigned rank() const { return rank_; }
    const std::vector<Letter>& letters() const { return letters_; }
    bool is_empty() const { return letters_.empty(); }

    // number of distinct generators actually appearing
    unsigned generators_used() const {
        std::vector<bool> seen(rank_ + 1, false);
        unsigned used = 0;
        for (const Letter& l : letters_)
            if (!seen[l.generator]) { seen[l.generator] = true; ++used; }
        return used;
    }

    Word concat(const Word& o) const {
        Word out = *this;
        for (const Letter& l : o.letters_) out.append(l.generator, l.exponent);
        return out;
    }

    Word inverse() const {
        Word out = empty(rank_);
        for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
            out.append(it->generator, -it->exponent);
        return out;
    }

    Word power(long n) const {
        Word base = n < 0 ? inverse() : *this;
        Word out = empty(rank_);
        for (long i = 0; i < (n < 0 ? -n : n); ++i) out = out.concat(base);
        return out;
    }

    bool operator==(const Word&) const = default;

    std::string str() const {
        if (letters_.empty()) return "";
        std::string out;
        for (std::size_t i = 0; i < letters_.size(); ++i) {
            if (i) out += ' ';
            out += "x" + std::to_string(letters_[i].generator);
            if (letters_[i].exponent != 1) out += "^" + std::to_string(letters_[i].exponent);
        }
        return out;
    }

private:
    void append(unsigned gen, long exp) {
        if (exp == 0) return;
        if (!letters_.empty() && letters_.back().generator == gen) {
            letters_.back().exponent += exp;
            if (letters_.back().exponent == 0) letters_.pop_back();
            return;
        }
        letters_.push_back({gen, exp});
    }

    unsigned rank_ = 0;
    std::vector<Letter> letters_;
};

namespace detail {

class WordParser {
public:
    WordParser(std::string_view text, unsigned rank) : text_(text), rank_(rank) {}

    Word parse() {
        Word w = parse_sequence();
        skip_ws();
        if (pos_ != text_.size()) throw SyntaxError(pos_, "unexpected character");
        return w;
    }

private:
    Word parse_sequence() {
        Word out = Word::empty(rank_);
        skip_ws();
        while (pos_ < text_.size() && text_[pos_] != ']' && text_[pos_] != ',') {
            out = out.concat(parse_term());
            skip_ws();
        }
        return out;
    }

    Word parse_term() {
        skip_ws();
        if (pos_ >= text_.size()) throw SyntaxError(pos_, "expected a word factor");
        Word base = Word::empty(rank_);
        if (text_[pos_] == '[') {
            std::size_t open = pos_++;
            std::vector<Word> parts;
            parts.push_back(parse_sequence());
            skip_ws();
            while (pos_ < text_.size() && text_[pos_] == ',') {
                ++pos_;
                parts.push_back(parse_sequence());
                skip_ws();
            }
            if (pos_ >= text_.size() || text_[pos_] != ']')
                throw SyntaxError(open, "unterminated '['");
            ++pos_;
            if (parts.size() < 2) throw SyntaxError(open, "bracket needs at least two entries");
            // [a,b,...] = a b ... a^-1 b^-1 ...
            for (const Word& p : parts) base = base.concat(p);
            for (const Word& p : parts) base = base.concat(p.inverse());
        } else if (text_[pos_] == 'x') {
            std::size_t at = pos_++;
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                throw SyntaxError(at, "generator must be x<digits>");
            unsigned long idx = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                idx = idx * 10 + static_cast<unsigned long>(text_[pos_++] - '0');
            if (idx == 0) throw UnknownGenerator("generator indices start at x1");
            if (idx > rank_)
                throw RankMismatch("generator x" + std::to_string(idx) + " exceeds rank " +
                                   std::to_string(rank_));
            base = Word(rank_, {{static_cast<unsigned>(idx), 1}});
        } else {
            throw SyntaxError(pos_, "expected 'x<digits>' or '['");
        }
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '^') {
            std::size_t at = pos_++;
            skip_ws();
            bool neg = false;
            if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
                neg = text_[pos_] == '-';
                ++pos_;
            }
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
                throw SyntaxError(at, "'^' needs an integer exponent");
            long expo = 0;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                expo = expo * 10 + (text_[pos_++] - '0');
            base = base.power(neg ? -expo : expo);
        }
        return base;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    std::string_view text_;
    unsigned rank_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline Word parse_word(std::string_view text, unsigned rank) {
    return detail::WordParser(text, rank).parse();
}

inline int evaluate(const Word& w, const std::vector<int>& assignment, const FiniteGroup& G) {
    if (assignment.size() != w.rank())
        throw RankMismatch("assignment length " + std::to_string(assignment.size()) +
                           " does not match rank " + std::to_string(w.rank()));
    int acc = G.identity();
    for (const Letter& l : w.letters())
        acc = G.mul(acc, G.pow(assignment[l.generator - 1], l.exponent));
    return acc;
}

struct WordShape {
    enum class Kind {
        ProductOfSquares,               // x1^2 ... xk^2, payload k
        ProductOfCommutators,           // [x1,x2]...[x_{2g-1},x_{2g}], payload g
        GeneralizedCommutatorProduct,   // blocks [x.,...,x.] of sizes block_sizes (>= 2)
        PowerProduct,                   // x1^{n1} ... xm^{nm}, payload exponents
        Generic
    };
    Kind kind = Kind::Generic;
    unsigned count = 0;                  // k or g
    std::vector<unsigned> block_sizes;   // generalized commutators
    std::vector<long> exponents;         // power products
};

// Recognizes the closed-form word families on the freely reduced letters.
// Shapes require pairwise disjoint generators; recognition is invariant under
// consistent renaming.
inline WordShape recognize_shape(const Word& w) {
    const auto& ls = w.letters();
    WordShape shape;

    auto all_distinct = [](const std::vector<unsigned>& gens) {
        std::vector<unsigned> s = gens;
        std::sort(s.begin(), s.end());
        return std::adjacent_find(s.begin(), s.end()) == s.end();
    };

    // x_{a1}^2 ... x_{ak}^2 on distinct generators
    {
        std::vector<unsigned> gens;
        bool ok = !ls.empty();
        for (const Letter& l : ls) {
            if (l.exponent != 2) { ok = false; break; }
            gens.push_back(l.generator);
        }
        if (ok && all_distinct(gens)) {
            shape.kind = WordShape::Kind::ProductOfSquares;
            shape.count = static_cast<unsigned>(gens.size());
            return shape;
        }
    }

    // blocks x_{a1}..x_{am} x_{a1}^-1..x_{am}^-1 on globally distinct generators
    {
        std::vector<unsigned> sizes;
        std::vector<unsigned> gens;
        bool ok = !ls.empty();
        std::size_t i = 0;
        while (ok && i < ls.size()) {
            std::vector<unsigned> block;
            while (i < ls.size() && ls[i].exponent == 1) block.push_back(ls[i++].generator);
            if (block.size() < 2) { ok = false; break; }
            for (unsigned g : block) {
                if (i >= ls.size() || ls[i].exponent != -1 || ls[i].generator != g) {
                    ok = false;
                    break;
                }
                ++i;
            }
            if (!ok) break;
            sizes.push_back(static_cast<unsigned>(block.size()));
            gens.insert(gens.end(), block.begin(), block.end());
        }
        if (ok && all_distinct(gens)) {
            bool all_pairs = true;
            for (unsigned s : sizes) all_pairs = all_pairs && s == 2;
            if (all_pairs) {
                shape.kind = WordShape::Kind::ProductOfCommutators;
                shape.count = static_cast<unsigned>(sizes.size());
            } else {
                shape.kind = WordShape::Kind::GeneralizedCommutatorProduct;
                shape.block_sizes = std::move(sizes);
            }
            return shape;
        }
    }

    // x_{a1}^{n1} ... x_{am}^{nm} on distinct generators
    {
        std::vector<unsigned> gens;
        for (const Letter& l : ls) gens.push_back(l.generator);
        if (all_distinct(gens)) {
            shape.kind = WordShape::Kind::PowerProduct;
            for (const Letter& l : ls) shape.exponents.push_back(l.exponent);
            return shape;
        }
    }

    return shape;  // Generic
}

}  // namespace surfhom
