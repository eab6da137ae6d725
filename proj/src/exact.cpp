#include "incrun/exact.hpp"

#include <array>
#include <stdexcept>
#include <string>
#include <utility>

#include "incrun/errors.hpp"

namespace incrun {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) {
        throw std::domain_error(msg);
    }
}

// 2x2 matrix over BigInt, row-major.
using Mat2 = std::array<BigInt, 4>;

Mat2 mul(const Mat2& a, const Mat2& b) {
    return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

Mat2 mat_pow(Mat2 base, unsigned long e) {
    Mat2 result{1, 0, 0, 1};
    while (e > 0) {
        if (e & 1UL) {
            result = mul(result, base);
        }
        base = mul(base, base);
        e >>= 1UL;
    }
    return result;
}

// Element u + v*sqrt(-3) of Z[sqrt(-3)].
struct ZS3 {
    BigInt u;
    BigInt v;
};

ZS3 mul(const ZS3& a, const ZS3& b) {
    return {a.u * b.u - 3 * a.v * b.v, a.u * b.v + a.v * b.u};
}

ZS3 pow(ZS3 base, unsigned long e) {
    ZS3 result{1, 0};
    while (e > 0) {
        if (e & 1UL) {
            result = mul(result, base);
        }
        base = mul(base, base);
        e >>= 1UL;
    }
    return result;
}

}  // namespace

BigInt a_eval(long n, long i) {
    require(n >= 1, "a_eval: n must be >= 1");
    require(i >= 1, "a_eval: i must be >= 1");
    const BigInt x(n);
    BigInt prev = x - 1;        // a_1
    if (i == 1) {
        return prev;
    }
    BigInt cur = x * (x - 2);   // a_2
    const BigInt c1 = 2 * x - 1;
    const BigInt c0 = x * x - x + 1;
    for (long k = 2; k < i; ++k) {
        BigInt next = c1 * cur - c0 * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

BigInt a_eval_fast(long n, long i) {
    require(n >= 1, "a_eval_fast: n must be >= 1");
    require(i >= 1, "a_eval_fast: i must be >= 1");
    const BigInt x(n);
    const BigInt a1 = x - 1;
    if (i == 1) {
        return a1;
    }
    const BigInt a2 = x * (x - 2);
    if (i == 2) {
        return a2;
    }
    const Mat2 companion{2 * x - 1, -(x * x - x + 1), BigInt(1), BigInt(0)};
    // (a_i, a_{i-1})^T = companion^{i-2} (a_2, a_1)^T
    const Mat2 p = mat_pow(companion, static_cast<unsigned long>(i - 2));
    return p[0] * a2 + p[1] * a1;
}

BigInt a_closed(long n, long i) {
    require(n >= 1, "a_closed: n must be >= 1");
    require(i >= 1, "a_closed: i must be >= 1");
    // a_i(n) = X lambda1^{i-1} + Y lambda2^{i-1} with
    //   lambda1,2 = n - 1/2 +- sqrt(-3)/2
    //   X, Y      = (n-1)/2 +- (n+1)/6 sqrt(-3).
    // Scaled by 6 * 2^{i-1} everything lives in Z[sqrt(-3)]:
    //   6X = 3(n-1) + (n+1) s,  2*lambda1 = (2n-1) + s.
    const BigInt x(n);
    const unsigned long e = static_cast<unsigned long>(i - 1);
    const ZS3 x6{3 * (x - 1), x + 1};
    const ZS3 y6{3 * (x - 1), -(x + 1)};
    const ZS3 lam2{2 * x - 1, 1};
    const ZS3 lam2c{2 * x - 1, -1};
    const ZS3 t1 = mul(x6, pow(lam2, e));
    const ZS3 t2 = mul(y6, pow(lam2c, e));
    if (t1.v + t2.v != 0) {
        throw InternalError("a_closed: sqrt(-3) coefficient did not vanish for n=" +
                            std::to_string(n) + ", i=" + std::to_string(i));
    }
    const BigInt numerator = t1.u + t2.u;
    const BigInt scale = 6 * big_pow2(e);
    if (!divides(scale, numerator)) {
        throw InternalError("a_closed: scaled sum not divisible by 6*2^(i-1) for n=" +
                            std::to_string(n) + ", i=" + std::to_string(i));
    }
    BigInt result;
    mpz_divexact(result.get_mpz_t(), numerator.get_mpz_t(), scale.get_mpz_t());
    return result;
}

PolynomialZ a_poly(long i) {
    require(i >= 1, "a_poly: i must be >= 1");
    PolynomialZ prev({BigInt(-1), BigInt(1)});            // x - 1
    if (i == 1) {
        return prev;
    }
    PolynomialZ cur({BigInt(0), BigInt(-2), BigInt(1)});  // x^2 - 2x
    const PolynomialZ c1({BigInt(-1), BigInt(2)});        // 2x - 1
    const PolynomialZ c0({BigInt(1), BigInt(-1), BigInt(1)});  // x^2 - x + 1
    for (long k = 2; k < i; ++k) {
        PolynomialZ next = c1 * cur - c0 * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

std::pair<SqrtM3, SqrtM3> a_char_roots(long n) {
    const Rational half(BigInt(1), BigInt(2));
    const Rational re = Rational(n) - half;
    return {SqrtM3(re, half), SqrtM3(re, -half)};
}

std::pair<SqrtM3, SqrtM3> a_closed_constants(long n) {
    const Rational re(BigInt(n - 1), BigInt(2));
    const Rational sq(BigInt(n + 1), BigInt(6));
    return {SqrtM3(re, sq), SqrtM3(re, -sq)};
}

ABPair ab_eval(long n, long i) {
    require(n >= 1, "ab_eval: n must be >= 1");
    require(i >= 2, "ab_eval: i must be >= 2");
    const BigInt x(n);
    const BigInt ca = x * x - 1;
    const BigInt cb = x * x - x + 1;
    BigInt a = 1;  // A_2
    BigInt b = 0;  // B_2
    for (long k = 2; k < i; ++k) {
        BigInt next_a = ca * a - b;
        b = cb * (a + b);
        a = std::move(next_a);
    }
    return {std::move(a), std::move(b), i};
}

Rational e2(long n) {
    require(n >= 2, "e2: n must be >= 2 (a one-sided die never increases)");
    const unsigned long e = static_cast<unsigned long>(n);
    return Rational(big_pow(n, e), big_pow(n - 1, e));
}

E3Expectation e3_expectation(long n) {
    require(n >= 3, "e3: n must be >= 3 (no strictly increasing run of three below 3 sides)");
    BigInt num = big_pow(n, static_cast<unsigned long>(n));
    BigInt den = a_eval(n, n);
    Rational value(num, den);
    return {std::move(value), std::move(num), std::move(den)};
}

Rational e3(long n) {
    return e3_expectation(n).value;
}

BigInt gcd_predicted_formula(long n) {
    require(n >= 3, "gcd_predicted_formula: n must be >= 3");
    const long r = n % 12;
    const BigInt n2 = BigInt(n) * n;
    if (r == 2) {
        // n = 2 (mod 12) and n >= 3 force n >= 14, so floor(n/12) >= 1.
        return big_pow2(1 + nu2(BigInt(n / 12))) * n2;
    }
    if (r == 5 || r == 8 || r == 11) {
        return n2;
    }
    return 1;
}

BigInt an_mod_n3_predicted(long n) {
    require(n >= 3, "an_mod_n3_predicted: n must be >= 3");
    const BigInt x(n);
    const BigInt n3 = x * x * x;
    BigInt value;
    switch (n % 3) {
        case 0:
            value = -(x * (x - 1) / 2) * x * x + 1;
            break;
        case 1:
            value = x * x - 1;
            break;
        default:
            value = x * x * ((x + 1) * (x - 2) / 2);
            break;
    }
    BigInt reduced;
    mpz_mod(reduced.get_mpz_t(), value.get_mpz_t(), n3.get_mpz_t());
    return reduced;
}

GcdReport gcd_report(long n) {
    require(n >= 3, "gcd_report: n must be >= 3");
    GcdReport report;
    report.n = n;
    report.a_n = a_eval(n, n);
    report.residue_class_mod12 = static_cast<int>(n % 12);

    const BigInt nn = big_pow(n, static_cast<unsigned long>(n));
    report.gcd_actual = big_gcd(nn, report.a_n);
    report.gcd_predicted = gcd_predicted_formula(n);
    report.e3_is_integer = divides(report.a_n, nn);

    const BigInt n3 = BigInt(n) * n * n;
    BigInt measured;
    mpz_mod(measured.get_mpz_t(), report.a_n.get_mpz_t(), n3.get_mpz_t());
    report.an_mod_n3_ok = (measured == an_mod_n3_predicted(n));

    if (report.residue_class_mod12 == 2) {
        report.nu2_a = nu2(report.a_n);
    }
    return report;
}

}  // namespace incrun
