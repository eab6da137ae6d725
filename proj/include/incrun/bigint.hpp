#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace incrun {

// Arbitrary-precision integer. All exact computation in this library runs on
// BigInt; nothing overflows silently.
using BigInt = mpz_class;

inline BigInt big_pow(const BigInt& base, unsigned long exp) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

inline BigInt big_pow(long base, unsigned long exp) {
    return big_pow(BigInt(base), exp);
}

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// 2^k
inline BigInt big_pow2(unsigned long k) {
    BigInt r = 1;
    mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), k);
    return r;
}

inline bool divides(const BigInt& d, const BigInt& m) {
    return mpz_divisible_p(m.get_mpz_t(), d.get_mpz_t()) != 0;
}

// 2-adic valuation: the largest v with 2^v | m. Undefined for m = 0.
inline unsigned long nu2(const BigInt& m) {
    if (m == 0) {
        throw std::domain_error("nu2: zero has no finite 2-adic valuation");
    }
    return static_cast<unsigned long>(mpz_scan1(m.get_mpz_t(), 0));
}

}  // namespace incrun
