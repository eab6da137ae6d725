#pragma once

#include <optional>

#include "incrun/bigint.hpp"
#include "incrun/polynomial.hpp"
#include "incrun/rational.hpp"
#include "incrun/sqrtm3.hpp"

namespace incrun {

// The polynomial family behind the run-of-three expectation:
//   a_1(x) = x - 1,  a_2(x) = x(x - 2),
//   a_{i+2}(x) = (2x - 1) a_{i+1}(x) - (x^2 - x + 1) a_i(x),
// with E3(n) = n^n / a_n(n). Three independent evaluation routes are kept:
// linear iteration, companion-matrix repeated squaring, and the exact
// closed form over Q(sqrt(-3)).

/// a_i(n) by linear iteration of the recurrence. O(i) big-integer ops.
BigInt a_eval(long n, long i);

/// a_i(n) by repeated squaring of the 2x2 companion matrix
/// [[2n-1, -(n^2-n+1)], [1, 0]] applied to (a_2(n), a_1(n)).
/// O(log i) big-integer matrix products.
BigInt a_eval_fast(long n, long i);

/// a_i(n) from the closed form X*lambda1^{i-1} + Y*lambda2^{i-1} with
/// lambda = n - 1/2 +- sqrt(-3)/2, evaluated exactly in Z[sqrt(-3)] after
/// scaling by 6*2^{i-1} to keep every intermediate integral.
///
/// Throws InternalError if the sqrt(-3) coefficient of the sum fails to
/// vanish or the final exact division fails; both would mean broken ring
/// arithmetic, and the check is part of the contract.
BigInt a_closed(long n, long i);

/// Symbolic coefficients of a_i(x), ascending degree.
PolynomialZ a_poly(long i);

/// The characteristic roots lambda1, lambda2 = n - 1/2 +- sqrt(-3)/2 and the
/// initial-condition constants X, Y of the closed form, as exact elements of
/// Q(sqrt(-3)). first = the +sqrt(-3) member of each pair.
std::pair<SqrtM3, SqrtM3> a_char_roots(long n);
std::pair<SqrtM3, SqrtM3> a_closed_constants(long n);

/// One row of the auxiliary pair A_i, B_i:
///   A_2 = 1, B_2 = 0,
///   A_{i+1} = (x^2 - 1) A_i - B_i,  B_{i+1} = (x^2 - x + 1)(A_i + B_i),
/// which tie a_i to the Markov determinant via
///   n^3 (n-2) A_i(n) - n^3 B_i(n) = n^i a_i(n).
struct ABPair {
    BigInt a_val;
    BigInt b_val;
    long index = 2;
};

ABPair ab_eval(long n, long i);

/// E2(n) = (n/(n-1))^n, reduced. Requires n >= 2.
Rational e2(long n);

/// E3(n) = n^n / a_n(n), reduced. Requires n >= 3 (no strictly increasing
/// run of three exists for n < 3, and a_2(2) = 0 makes the formula singular).
Rational e3(long n);

/// E3(n) together with the pre-reduction numerator and denominator, kept for
/// gcd inspection.
struct E3Expectation {
    Rational value;
    BigInt raw_num;  // n^n
    BigInt raw_den;  // a_n(n)
};

E3Expectation e3_expectation(long n);

/// Everything the gcd theorem and its companion lemmas say about one n.
struct GcdReport {
    long n = 0;
    BigInt a_n;
    BigInt gcd_actual;     // gcd(n^n, a_n(n)) by Euclid
    BigInt gcd_predicted;  // three-case theorem formula, no a_n involved
    int residue_class_mod12 = 0;
    std::optional<unsigned long> nu2_a;  // nu2(a_n(n)), only when n = 2 (mod 12)
    bool e3_is_integer = false;          // a_n(n) | n^n
    bool an_mod_n3_ok = false;           // a_n(n) mod n^3 matches the case formula
};

GcdReport gcd_report(long n);

/// Predicted gcd(n^n, a_n(n)):
///   2^{1+nu2(floor(n/12))} n^2  if n = 2  (mod 12)
///   n^2                         if n = 5, 8, 11 (mod 12)
///   1                           otherwise
/// Computed from the case formula alone so prediction and measurement share
/// no code.
BigInt gcd_predicted_formula(long n);

/// Predicted a_n(n) mod n^3, reduced into [0, n^3):
///   -n(n-1)/2 * n^2 + 1   if n = 0 (mod 3)
///   n^2 - 1               if n = 1 (mod 3)
///   n^2 (n+1)(n-2)/2      if n = 2 (mod 3)
BigInt an_mod_n3_predicted(long n);

}  // namespace incrun
