#pragma once

// Exact elements of Q(zeta_e), e the group exponent. A value is a sparse
// rational combination of powers zeta_e^j kept in a canonical spanning set:
// write e as a product of prime powers q = p^a; zeta_e^j factors uniquely as
// prod_q zeta_q^(x_q) (CRT on exponents), and any factor with
// x_q >= phi(q) is rewritten once through Phi_q(zeta_q) = 0, i.e. the shifted
// relation sum_t zeta_p^t = 0 for p | e. Exponents whose CRT tuple is
// componentwise < phi(q) form a Q-basis, so equality after reduction is
// coefficient-wise.

#include <cstdint>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "surfhom/arith.hpp"

namespace surfhom::detail {

struct CycBasis {
    unsigned e = 1;
    // expand[j] = canonical expansion of zeta_e^j as (exponent, +-1) terms
    std::vector<std::vector<std::pair<unsigned, int>>> expand;
};

inline CycBasis make_cyc_basis(unsigned e) {
    CycBasis basis;
    basis.e = e;
    basis.expand.resize(e);

    // prime-power factorization
    struct Factor { unsigned p, q, m, c; };  // q = p^a, m = e/q, c = m^{-1} mod q
    std::vector<Factor> factors;
    {
        unsigned rest = e;
        for (unsigned p = 2; p <= rest; ++p) {
            if (rest % p) continue;
            unsigned q = 1;
            while (rest % p == 0) { rest /= p; q *= p; }
            unsigned m = e / q;
            unsigned c = 1;
            for (unsigned t = 1; t < q; ++t)
                if ((static_cast<unsigned long long>(m) * t) % q == 1) { c = t; break; }
            factors.push_back({p, q, m, c});
        }
    }

    for (unsigned j = 0; j < e; ++j) {
        std::vector<std::pair<unsigned, int>> terms{{0u, 1}};  // exponent contribution, sign
        for (const auto& f : factors) {
            unsigned x = static_cast<unsigned>((static_cast<unsigned long long>(j) * f.c) % f.q);
            unsigned phi_q = f.q - f.q / f.p;
            std::vector<std::pair<unsigned, int>> local;
            if (x < phi_q) {
                local.push_back({x, 1});
            } else {
                // zeta_q^x = -sum_{t=0}^{p-2} zeta_q^{s + t*q/p}, s = x - phi(q)
                unsigned s = x - phi_q;
                for (unsigned t = 0; t + 1 < f.p; ++t)
                    local.push_back({s + t * (f.q / f.p), -1});
            }
            std::vector<std::pair<unsigned, int>> next;
            next.reserve(terms.size() * local.size());
            for (const auto& [expo, sign] : terms)
                for (const auto& [y, s2] : local)
                    next.push_back({(expo + y * f.m) % e, sign * s2});
            terms = std::move(next);
        }
        basis.expand[j] = std::move(terms);
    }
    return basis;
}

inline const CycBasis& cyc_basis(unsigned e) {
    static std::mutex mu;
    static std::map<unsigned, CycBasis> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(e);
    if (it == cache.end()) it = cache.emplace(e, make_cyc_basis(e)).first;
    return it->second;
}

}  // namespace surfhom::detail

namespace surfhom {

class Cyclotomic {
public:
    Cyclotomic() : e_(1) {}

    static Cyclotomic zero(unsigned e) { return Cyclotomic(e); }

    static Cyclotomic rational(unsigned e, const Rational& q) {
        Cyclotomic c(e);
        if (q != 0) {
            Rational r = q;
            r.canonicalize();  // two-argument mpq_class constructions may not be reduced
            c.terms_.push_back({0, std::move(r)});
        }
        return c;
    }

    static Cyclotomic integer(unsigned e, const BigInt& z) { return rational(e, Rational(z)); }

    // zeta_e^j
    static Cyclotomic root(unsigned e, long j) {
        Cyclotomic c(e);
        long r = j % static_cast<long>(e);
        if (r < 0) r += static_cast<long>(e);
        c.add_raw(static_cast<unsigned>(r), Rational(1));
        c.reduce();
        return c;
    }

    unsigned conductor() const { return e_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_rational() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0);
    }

    bool is_rational_integer() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0 &&
                                  terms_[0].second.get_den() == 1);
    }

    Rational rational_value() const {
        if (!is_rational()) throw NonIntegerResult("cyclotomic value is not rational");
        return terms_.empty() ? Rational(0) : terms_[0].second;
    }

    BigInt integer_value() const {
        Rational q = rational_value();
        if (q.get_den() != 1) throw NonIntegerResult("cyclotomic value is not an integer");
        return q.get_num();
    }

    Cyclotomic conj() const {
        Cyclotomic out(e_);
        for (const auto& [j, c] : terms_) out.add_raw((e_ - j) % e_, c);
        out.reduce();
        return out;
    }

    Cyclotomic operator-() const {
        Cyclotomic out(e_);
        for (const auto& [j, c] : terms_) out.terms_.push_back({j, -c});
        return out;
    }

    Cyclotomic& operator+=(const Cyclotomic& o) {
        unsigned e = merge_conductor(o);
        Cyclotomic out(e);
        for (const auto& [j, c] : terms_) out.add_raw(j, c);
        for (const auto& [j, c] : o.terms_) out.add_raw(j, c);
        out.reduce();
        *this = std::move(out);
        return *this;
    }

    Cyclotomic& operator-=(const Cyclotomic& o) { return *this += -o; }

    Cyclotomic& operator*=(const Cyclotomic& o) {
        unsigned e = merge_conductor(o);
        Cyclotomic out(e);
        for (const auto& [j1, c1] : terms_)
            for (const auto& [j2, c2] : o.terms_)
                out.add_raw((j1 + j2) % e, c1 * c2);
        out.reduce();
        *this = std::move(out);
        return *this;
    }

    Cyclotomic& operator*=(const Rational& q) {
        if (q == 0) { terms_.clear(); return *this; }
        Rational r = q;
        r.canonicalize();  // callers may pass unreduced two-argument mpq values
        for (auto& [j, c] : terms_) c *= r;
        return *this;
    }

    Cyclotomic& operator/=(const Rational& q) {
        if (q == 0) throw Error("division of cyclotomic by zero");
        Rational r = q;
        r.canonicalize();
        for (auto& [j, c] : terms_) c /= r;
        return *this;
    }

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Rational& q) { return a *= q; }
    friend Cyclotomic operator*(const Rational& q, Cyclotomic a) { return a *= q; }
    friend Cyclotomic operator/(Cyclotomic a, const Rational& q) { return a /= q; }

    bool operator==(const Cyclotomic& o) const {
        if (is_rational() && o.is_rational())
            return (terms_.empty() ? Rational(0) : terms_[0].second) ==
                   (o.terms_.empty() ? Rational(0) : o.terms_[0].second);
        return e_ == o.e_ && terms_ == o.terms_;
    }
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    // Total order comparing the canonical dense coefficient sequence.
    // Terms are sorted by exponent with no zero coefficients, so the first
    // divergence in a merged walk decides.
    static int compare(const Cyclotomic& a, const Cyclotomic& b) {
        std::size_t ia = 0, ib = 0;
        while (ia < a.terms_.size() || ib < b.terms_.size()) {
            bool ha = ia < a.terms_.size(), hb = ib < b.terms_.size();
            unsigned ja = ha ? a.terms_[ia].first : 0, jb = hb ? b.terms_[ib].first : 0;
            if (ha && hb && ja == jb) {
                int c = cmp(a.terms_[ia].second, b.terms_[ib].second);
                if (c != 0) return c;
                ++ia; ++ib;
            } else if (ha && (!hb || ja < jb)) {
                return sgn(a.terms_[ia].second);
            } else {
                return -sgn(b.terms_[ib].second);
            }
        }
        return 0;
    }

    const std::vector<std::pair<unsigned, Rational>>& terms() const { return terms_; }

    std::vector<Rational> dense_coeffs() const {
        std::vector<Rational> out(e_, Rational(0));
        for (const auto& [j, c] : terms_) out[j] = c;
        return out;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string sym = "z" + std::to_string(e_);
        std::string out;
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            const auto& [j, c] = terms_[i];
            Rational a = c;
            if (i == 0) {
                if (a < 0) { out += "-"; a = -a; }
            } else {
                out += a < 0 ? " - " : " + ";
                if (a < 0) a = -a;
            }
            std::string coeff = a.get_str();
            if (j == 0) {
                out += coeff;
            } else {
                if (coeff != "1") out += coeff + "*";
                out += sym;
                if (j != 1) out += "^" + std::to_string(j);
            }
        }
        return out;
    }

private:
    explicit Cyclotomic(unsigned e) : e_(e) {}

    unsigned merge_conductor(const Cyclotomic& o) const {
        if (e_ == o.e_) return e_;
        if (is_rational()) return o.e_;
        if (o.is_rational()) return e_;
        throw Error("cyclotomic conductor mismatch (" + std::to_string(e_) + " vs " +
                    std::to_string(o.e_) + ")");
    }

    void add_raw(unsigned j, const Rational& c) {
        if (c == 0) return;
        terms_.push_back({j, c});
    }

    void reduce() {
        const auto& basis = detail::cyc_basis(e_);
        std::map<unsigned, Rational> acc;
        for (const auto& [j, c] : terms_)
            for (const auto& [k, sign] : basis.expand[j])
                acc[k] += sign > 0 ? c : -c;
        terms_.clear();
        for (auto& [j, c] : acc)
            if (c != 0) terms_.push_back({j, std::move(c)});
    }

    unsigned e_;
    std::vector<std::pair<unsigned, Rational>> terms_;  // sorted, canonical, nonzero
};

}  // namespace surfhom
