#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "incrun/bigint.hpp"

namespace incrun {

/// Dense polynomial over the integers, coefficients in ascending degree.
/// The highest stored coefficient is nonzero unless the polynomial is zero
/// (empty coefficient vector).
class PolynomialZ {
public:
    PolynomialZ() = default;
    explicit PolynomialZ(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree, or -1 for the zero polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    BigInt coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }
    const BigInt& leading_coeff() const { return coeffs_.back(); }

    BigInt eval(const BigInt& x) const {
        BigInt acc = 0;
        for (std::size_t k = coeffs_.size(); k-- > 0;) {
            acc = acc * x + coeffs_[k];
        }
        return acc;
    }

    friend PolynomialZ operator+(const PolynomialZ& a, const PolynomialZ& b) {
        std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt(0));
        for (std::size_t k = 0; k < c.size(); ++k) {
            c[k] = a.coeff(k) + b.coeff(k);
        }
        return PolynomialZ(std::move(c));
    }

    friend PolynomialZ operator-(const PolynomialZ& a, const PolynomialZ& b) {
        std::vector<BigInt> c(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt(0));
        for (std::size_t k = 0; k < c.size(); ++k) {
            c[k] = a.coeff(k) - b.coeff(k);
        }
        return PolynomialZ(std::move(c));
    }

    friend PolynomialZ operator*(const PolynomialZ& a, const PolynomialZ& b) {
        if (a.is_zero() || b.is_zero()) {
            return PolynomialZ();
        }
        std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
                c[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return PolynomialZ(std::move(c));
    }

    friend bool operator==(const PolynomialZ& a, const PolynomialZ& b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) {
            coeffs_.pop_back();
        }
    }

    std::vector<BigInt> coeffs_;
};

}  // namespace incrun
