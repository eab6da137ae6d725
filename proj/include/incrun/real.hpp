#pragma once

#include <mpfr.h>

#include <string>

#include "incrun/bigint.hpp"
#include "incrun/rational.hpp"

namespace incrun {

/// Binary floating-point value with explicit precision in bits (MPFR,
/// round-to-nearest). Binary operations evaluate at the larger operand
/// precision; conversions from exact values round once at the target
/// precision.
class Real {
public:
    static constexpr long kMinPrecision = 53;
    static constexpr long kDefaultPrecision = 128;

    explicit Real(long precision_bits = kDefaultPrecision);
    Real(const Real& other);
    Real(Real&& other) noexcept;
    Real& operator=(const Real& other);
    Real& operator=(Real&& other) noexcept;
    ~Real();

    static Real from_long(long v, long precision_bits);
    static Real from_double(double v, long precision_bits);
    static Real from_bigint(const BigInt& v, long precision_bits);
    static Real from_rational(const Rational& v, long precision_bits);
    /// Parse a decimal string. Throws std::invalid_argument on junk.
    static Real from_string(const std::string& s, long precision_bits);
    static Real pi(long precision_bits);
    /// 2^e, exact.
    static Real two_pow(long e, long precision_bits);

    long precision_bits() const;
    bool is_nan() const;
    int sign() const;  // -1, 0, +1

    /// The same value rounded once to a new precision.
    Real to_precision(long precision_bits) const;

    friend Real operator+(const Real& a, const Real& b);
    friend Real operator-(const Real& a, const Real& b);
    friend Real operator*(const Real& a, const Real& b);
    friend Real operator/(const Real& a, const Real& b);
    Real operator-() const;

    friend bool operator==(const Real& a, const Real& b) { return mpfr_cmp(a.x_, b.x_) == 0; }
    friend bool operator!=(const Real& a, const Real& b) { return mpfr_cmp(a.x_, b.x_) != 0; }
    friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.x_, b.x_) < 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.x_, b.x_) <= 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.x_, b.x_) > 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.x_, b.x_) >= 0; }

    Real abs() const;
    Real sqrt() const;
    Real exp() const;
    Real log() const;
    Real sin() const;
    Real cos() const;
    Real tan() const;
    Real atan() const;
    Real pow(const Real& e) const;

    double to_double() const;
    /// Decimal string; digits == 0 picks enough digits to round-trip
    /// the stored precision.
    std::string to_string(int digits = 0) const;

    mpfr_ptr raw() { return x_; }
    mpfr_srcptr raw() const { return x_; }

private:
    mpfr_t x_;
};

}  // namespace incrun
