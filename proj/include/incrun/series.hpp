#pragma once

#include <vector>

#include "incrun/bigint.hpp"
#include "incrun/rational.hpp"
#include "incrun/real.hpp"
#include "incrun/simulate.hpp"  // Execution

namespace incrun {

// Counts of permutations of length n with no increasing run of length >= 3
// except, respectively, a final run of exactly three (f), a final single
// rise (g), a final fall (h). f(n)/n! is the probability that continuous
// sampling stops at draw n.

struct CoeffTriple {
    long n = 0;
    BigInt f;
    BigInt g;
    BigInt h;
};

/// Exact f, g, h for n = 0..max_n via the binomial-convolution recurrences:
///   f(n+1) = f(n) + g(n) + sum_{k=1}^{n-1} C(n,k) h(k) f(n-k)
/// (same shape for g with h(n), and for h with no extra term), seeded by
/// f(0)=g(0)=h(0)=1, f(1)=f(2)=g(1)=0, h(1)=1. Binomials come from an
/// incrementally updated Pascal row of exact integers. The convolutions are
/// data-parallel; both execution modes give identical integers.
std::vector<CoeffTriple> fgh_table(long max_n, Execution mode = Execution::parallel);

struct PgfCoeff {
    long n = 0;
    Rational p;
};

/// Stopping-probability coefficients p(n) = f(n)/n! (p(0) = 0) together with
/// the exact partial sums sum p, sum n*p, sum n^2*p up to max_n.
struct PgfTable {
    std::vector<PgfCoeff> coeffs;
    Rational sum_p;
    Rational sum_np;
    Rational sum_n2p;
};

PgfTable pgf(long max_n);

/// Closed forms at one point, all at the given working precision:
///   H(x) = 1/2 + (sqrt3/2) tan(pi/6 + x sqrt3/2)
///   G(x) = sec(pi/6 + x sqrt3/2) ((sqrt3/2) e^{x/2} - sin(x sqrt3/2))
///   F(x) = 2 + (sqrt3/2) e^{x/2} (x-1) sec(pi/6 + x sqrt3/2)
/// Throws PoleProximityError when |cos(pi/6 + x sqrt3/2)| < 2^{-precision/2}
/// (x near the pole 2*pi*sqrt3/9 or its translates).
struct ClosedValues {
    Real f;
    Real g;
    Real h;
};

ClosedValues closed_values(const Real& x, long precision_bits);

/// Limiting moments and ratio limits:
///   mu  = sqrt(3e) / (sqrt3 C - S)            with S = sin(sqrt3/2), C = cos(sqrt3/2)
///   var = (9 sqrt(e) C + sqrt(3e) S - 3e) / (sqrt3 C - S)^2
///   f/g -> (a-1)/(1 - e^{-a/2}),  g/h -> e^{a/2} - 1,  a = 2 pi sqrt3 / 9
struct LimitStats {
    Real mu;
    Real var;
    Real fg_limit;
    Real gh_limit;
    Real pole_a;
    long precision_bits = Real::kDefaultPrecision;
};

LimitStats limit_stats(long precision_bits);

/// Continuous-argument expectation
///   E3(x) = x^x / [ (x^2-x+1)^{(x-1)/2} ((x-1) cos a - (x+1) sin a / sqrt3) ]
/// with a = (x-1) arctan(sqrt3/(2x-1)); powers go through exp/log at the
/// working precision. Requires x >= 3; throws PoleProximityError when the
/// trigonometric factor of the denominator is below 2^{-precision/2}.
Real e3_continuous(const Real& x, long precision_bits);

}  // namespace incrun
