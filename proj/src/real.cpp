#include "incrun/real.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace incrun {

namespace {

long checked_precision(long bits) {
    if (bits < Real::kMinPrecision) {
        throw std::invalid_argument("Real: precision must be >= 53 bits");
    }
    return bits;
}

}  // namespace

Real::Real(long precision_bits) {
    mpfr_init2(x_, checked_precision(precision_bits));
}

Real::Real(const Real& other) {
    mpfr_init2(x_, mpfr_get_prec(other.x_));
    mpfr_set(x_, other.x_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
    mpfr_init2(x_, mpfr_get_prec(other.x_));
    mpfr_swap(x_, other.x_);
}

Real& Real::operator=(const Real& other) {
    if (this != &other) {
        mpfr_set_prec(x_, mpfr_get_prec(other.x_));
        mpfr_set(x_, other.x_, MPFR_RNDN);
    }
    return *this;
}

Real& Real::operator=(Real&& other) noexcept {
    if (this != &other) {
        mpfr_swap(x_, other.x_);
    }
    return *this;
}

Real::~Real() {
    mpfr_clear(x_);
}

Real Real::from_long(long v, long precision_bits) {
    Real r(precision_bits);
    mpfr_set_si(r.x_, v, MPFR_RNDN);
    return r;
}

Real Real::from_double(double v, long precision_bits) {
    Real r(precision_bits);
    mpfr_set_d(r.x_, v, MPFR_RNDN);
    return r;
}

Real Real::from_bigint(const BigInt& v, long precision_bits) {
    Real r(precision_bits);
    mpfr_set_z(r.x_, v.get_mpz_t(), MPFR_RNDN);
    return r;
}

Real Real::from_rational(const Rational& v, long precision_bits) {
    Real r(precision_bits);
    mpfr_set_q(r.x_, v.raw(), MPFR_RNDN);
    return r;
}

Real Real::from_string(const std::string& s, long precision_bits) {
    Real r(precision_bits);
    if (s.empty() || mpfr_set_str(r.x_, s.c_str(), 10, MPFR_RNDN) != 0) {
        throw std::invalid_argument("Real: cannot parse \"" + s + "\" as a decimal number");
    }
    return r;
}

Real Real::pi(long precision_bits) {
    Real r(precision_bits);
    mpfr_const_pi(r.x_, MPFR_RNDN);
    return r;
}

Real Real::two_pow(long e, long precision_bits) {
    Real r(precision_bits);
    mpfr_set_si(r.x_, 1, MPFR_RNDN);
    mpfr_mul_2si(r.x_, r.x_, e, MPFR_RNDN);
    return r;
}

long Real::precision_bits() const {
    return static_cast<long>(mpfr_get_prec(x_));
}

bool Real::is_nan() const {
    return mpfr_nan_p(x_) != 0;
}

int Real::sign() const {
    return mpfr_sgn(x_);
}

Real Real::to_precision(long precision_bits) const {
    Real r(precision_bits);
    mpfr_set(r.x_, x_, MPFR_RNDN);
    return r;
}

namespace {

long result_prec(const Real& a, const Real& b) {
    return std::max(a.precision_bits(), b.precision_bits());
}

}  // namespace

Real operator+(const Real& a, const Real& b) {
    Real r(result_prec(a, b));
    mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

Real operator-(const Real& a, const Real& b) {
    Real r(result_prec(a, b));
    mpfr_sub(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

Real operator*(const Real& a, const Real& b) {
    Real r(result_prec(a, b));
    mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

Real operator/(const Real& a, const Real& b) {
    Real r(result_prec(a, b));
    mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}

Real Real::operator-() const {
    Real r(precision_bits());
    mpfr_neg(r.x_, x_, MPFR_RNDN);
    return r;
}

#define INCRUN_REAL_UNARY(name, mpfr_fn)      \
    Real Real::name() const {                 \
        Real r(precision_bits());             \
        mpfr_fn(r.x_, x_, MPFR_RNDN);         \
        return r;                             \
    }

INCRUN_REAL_UNARY(abs, mpfr_abs)
INCRUN_REAL_UNARY(sqrt, mpfr_sqrt)
INCRUN_REAL_UNARY(exp, mpfr_exp)
INCRUN_REAL_UNARY(log, mpfr_log)
INCRUN_REAL_UNARY(sin, mpfr_sin)
INCRUN_REAL_UNARY(cos, mpfr_cos)
INCRUN_REAL_UNARY(tan, mpfr_tan)
INCRUN_REAL_UNARY(atan, mpfr_atan)

#undef INCRUN_REAL_UNARY

Real Real::pow(const Real& e) const {
    Real r(result_prec(*this, e));
    mpfr_pow(r.x_, x_, e.x_, MPFR_RNDN);
    return r;
}

double Real::to_double() const {
    return mpfr_get_d(x_, MPFR_RNDN);
}

std::string Real::to_string(int digits) const {
    if (digits <= 0) {
        // ceil(bits * log10(2)) + 2 guard digits round-trips the value.
        digits = static_cast<int>(std::ceil(static_cast<double>(precision_bits()) * 0.30103)) + 2;
    }
    const int size = mpfr_snprintf(nullptr, 0, "%.*Rg", digits, x_);
    std::vector<char> buf(static_cast<std::size_t>(size) + 1);
    mpfr_snprintf(buf.data(), buf.size(), "%.*Rg", digits, x_);
    return std::string(buf.data());
}

}  // namespace incrun
