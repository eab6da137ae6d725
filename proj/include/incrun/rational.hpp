#pragma once

#include <stdexcept>
#include <string>

#include "incrun/bigint.hpp"

namespace incrun {

/// Exact rational number, always stored reduced with a positive denominator.
///
/// Invariants: gcd(|numerator|, denominator) = 1 and denominator >= 1 hold for
/// every value that can be observed, including all arithmetic results.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long v) : q_(v) {}  // NOLINT: implicit by design, mirrors integer literals
    explicit Rational(const BigInt& v) : q_(v) {}
    Rational(const BigInt& num, const BigInt& den) : q_(num, den) {
        if (den == 0) {
            throw std::domain_error("Rational: zero denominator");
        }
        q_.canonicalize();
    }

    BigInt numerator() const { return q_.get_num(); }
    BigInt denominator() const { return q_.get_den(); }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.q_ + b.q_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.q_ - b.q_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.q_ * b.q_); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.q_ == 0) {
            throw std::domain_error("Rational: division by zero");
        }
        return Rational(a.q_ / b.q_);
    }
    Rational operator-() const { return Rational(mpq_class(-q_)); }

    Rational& operator+=(const Rational& b) { q_ += b.q_; return *this; }
    Rational& operator-=(const Rational& b) { q_ -= b.q_; return *this; }
    Rational& operator*=(const Rational& b) { q_ *= b.q_; return *this; }
    Rational& operator/=(const Rational& b) { *this = *this / b; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    /// "num/den", or just "num" when the value is an integer.
    std::string to_string() const {
        if (is_integer()) {
            return q_.get_num().get_str();
        }
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    // Raw handle for conversion into MPFR values.
    mpq_srcptr raw() const { return q_.get_mpq_t(); }

private:
    explicit Rational(const mpq_class& q) : q_(q) {}

    mpq_class q_;  // kept canonical
};

}  // namespace incrun
