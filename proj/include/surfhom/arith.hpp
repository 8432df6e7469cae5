#pragma once

// Exact arithmetic primitives shared by every module: arbitrary-precision
// integers/rationals (GMP) and small helpers on top of them.

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "surfhom/errors.hpp"

namespace surfhom {

using BigInt = mpz_class;
using Rational = mpq_class;

inline BigInt int_pow(const BigInt& base, unsigned long exp) {
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
    return out;
}

inline BigInt factorial(unsigned long n) {
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// base^exp for signed exp; base must be nonzero when exp < 0.
inline Rational rat_pow(const Rational& base, long exp) {
    if (exp >= 0) {
        Rational out;
        mpz_pow_ui(out.get_num_mpz_t(), base.get_num().get_mpz_t(), static_cast<unsigned long>(exp));
        mpz_pow_ui(out.get_den_mpz_t(), base.get_den().get_mpz_t(), static_cast<unsigned long>(exp));
        out.canonicalize();
        return out;
    }
    if (base == 0) throw Error("rat_pow: zero base with negative exponent");
    Rational inv = make_rational(base.get_den(), base.get_num());
    return rat_pow(inv, -exp);
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline bool divides(const BigInt& d, const BigInt& n) {
    return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline bool is_prime(unsigned long n) {
    if (n < 2) return false;
    BigInt z(static_cast<unsigned long>(n));
    return mpz_probab_prime_p(z.get_mpz_t(), 32) != 0;
}

// Modular arithmetic over a word-sized prime field.
struct Fp {
    std::uint64_t p;

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= p ? s - p : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const {
        return a >= b ? a - b : a + p - b;
    }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return (static_cast<unsigned __int128>(a) * b) % p;
    }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
        std::uint64_t r = 1 % p;
        a %= p;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    std::uint64_t inv(std::uint64_t a) const { return pow(a, p - 2); }
    std::uint64_t reduce(const BigInt& z) const {
        BigInt m = z % BigInt(static_cast<unsigned long>(p));
        if (m < 0) m += static_cast<unsigned long>(p);
        return m.get_ui();
    }
};

}  // namespace surfhom
