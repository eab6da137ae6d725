#pragma once

#include "incrun/rational.hpp"

namespace incrun {

/// Exact element of Q(sqrt(-3)), stored as re + sq*sqrt(-3).
///
/// Houses the characteristic roots n - 1/2 +- sqrt(-3)/2 of the a_i
/// recurrence and the matching initial-condition constants.
struct SqrtM3 {
    Rational re;
    Rational sq;

    SqrtM3() = default;
    SqrtM3(Rational real_part, Rational sqrt_part)
        : re(std::move(real_part)), sq(std::move(sqrt_part)) {}

    SqrtM3 conj() const { return {re, -sq}; }

    friend SqrtM3 operator+(const SqrtM3& a, const SqrtM3& b) {
        return {a.re + b.re, a.sq + b.sq};
    }
    friend SqrtM3 operator-(const SqrtM3& a, const SqrtM3& b) {
        return {a.re - b.re, a.sq - b.sq};
    }
    // (a + b*s)(c + d*s) = (ac - 3bd) + (ad + bc)s  with s^2 = -3
    friend SqrtM3 operator*(const SqrtM3& a, const SqrtM3& b) {
        return {a.re * b.re - Rational(3) * a.sq * b.sq, a.re * b.sq + a.sq * b.re};
    }
    friend bool operator==(const SqrtM3& a, const SqrtM3& b) {
        return a.re == b.re && a.sq == b.sq;
    }

    SqrtM3 pow(unsigned long e) const {
        SqrtM3 result(Rational(1), Rational(0));
        SqrtM3 base = *this;
        while (e > 0) {
            if (e & 1UL) {
                result = result * base;
            }
            base = base * base;
            e >>= 1UL;
        }
        return result;
    }
};

}  // namespace incrun
