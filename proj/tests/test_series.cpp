#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "incrun/errors.hpp"
#include "incrun/exact.hpp"
#include "incrun/series.hpp"

using namespace incrun;

namespace {

// Frozen from the published n=0..10 table; h also matches the listed prefix
// of OEIS A080635.
const long kF[] = {1, 0, 0, 1, 3, 15, 71, 426, 2778, 20845, 171729};
const long kG[] = {1, 0, 1, 2, 8, 31, 160, 910, 6077, 45026, 373220};
const long kH[] = {1, 1, 1, 3, 9, 39, 189, 1107, 7281, 54351, 448821};

// Truncated exact Taylor sum  sum_{n<=N} c(n) x^n / n!  evaluated in Real.
// Independent oracle for closed_values: it only touches the recurrence
// coefficients, never the closed forms.
Real taylor_sum(const std::vector<CoeffTriple>& table, BigInt CoeffTriple::*member,
                const Real& x, long max_n, long precision_bits) {
    Real sum = Real::from_long(0, precision_bits);
    Real term = Real::from_long(1, precision_bits);  // x^n / n!
    for (long n = 0; n <= max_n; ++n) {
        if (n > 0) {
            term = term * x / Real::from_long(n, precision_bits);
        }
        sum = sum + Real::from_bigint(table[static_cast<std::size_t>(n)].*member,
                                      precision_bits) *
                        term;
    }
    return sum;
}

}  // namespace

TEST_CASE("fgh_table reproduces the published values") {
    const auto table = fgh_table(10);
    REQUIRE(table.size() == 11);
    for (std::size_t n = 0; n <= 10; ++n) {
        CHECK(table[n].n == static_cast<long>(n));
        CHECK(table[n].f == kF[n]);
        CHECK(table[n].g == kG[n]);
        CHECK(table[n].h == kH[n]);
    }
    CHECK_THROWS_AS(fgh_table(-1), std::domain_error);
}

TEST_CASE("fgh_table edge sizes") {
    const auto just_zero = fgh_table(0);
    REQUIRE(just_zero.size() == 1);
    CHECK(just_zero[0].f == 1);
    CHECK(just_zero[0].g == 1);
    CHECK(just_zero[0].h == 1);
}

TEST_CASE("fgh_table serial and parallel agree") {
    const auto serial = fgh_table(150, Execution::serial);
    const auto parallel = fgh_table(150, Execution::parallel);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].f == parallel[i].f);
        CHECK(serial[i].g == parallel[i].g);
        CHECK(serial[i].h == parallel[i].h);
    }
}

TEST_CASE("pgf coefficients") {
    const PgfTable table = pgf(10);
    CHECK(table.coeffs[0].p == Rational(0));
    CHECK(table.coeffs[1].p == Rational(0));
    CHECK(table.coeffs[2].p == Rational(0));
    CHECK(table.coeffs[3].p == Rational(BigInt(1), BigInt(6)));
    CHECK(table.coeffs[4].p == Rational(BigInt(1), BigInt(8)));
    for (const PgfCoeff& c : table.coeffs) {
        CHECK(c.p >= Rational(0));
        CHECK(c.p <= Rational(1));
        CHECK(big_gcd(c.p.numerator(), c.p.denominator()) == 1);
    }
    CHECK(table.sum_p < Rational(1));
}

TEST_CASE("pgf normalization and moments at N=200") {
    const PgfTable table = pgf(200);
    const long prec = 192;
    const Real one = Real::from_long(1, prec);
    const Real tail = one - Real::from_rational(table.sum_p, prec);
    CHECK(tail > Real::from_long(0, prec));
    CHECK(tail < Real::from_string("1e-12", prec));

    const LimitStats stats = limit_stats(prec);
    const Real mean = Real::from_rational(table.sum_np, prec);
    CHECK((mean - stats.mu).abs() < Real::from_string("1e-10", prec));
    const Real second = Real::from_rational(table.sum_n2p, prec);
    CHECK((second - mean * mean - stats.var).abs() < Real::from_string("1e-8", prec));
}

TEST_CASE("closed_values at the pinned points") {
    const long prec = 128;
    const Real tol = Real::two_pow(-120, prec);
    const ClosedValues at0 = closed_values(Real::from_long(0, prec), prec);
    CHECK((at0.f - Real::from_long(1, prec)).abs() < tol);
    CHECK((at0.g - Real::from_long(1, prec)).abs() < tol);
    CHECK((at0.h - Real::from_long(1, prec)).abs() < tol);

    // the (x-1) factor vanishes: F(1) = 2, so P(1) = F(1) - 1 = 1
    const ClosedValues at1 = closed_values(Real::from_long(1, prec), prec);
    CHECK((at1.f - Real::from_long(2, prec)).abs() < tol);
}

TEST_CASE("closed_values refuses points near the pole") {
    const long prec = 128;
    const Real pole = limit_stats(prec).pole_a;
    CHECK_THROWS_AS(closed_values(pole, prec), PoleProximityError);
}

TEST_CASE("truncated series matches closed forms where the tail allows") {
    const long prec = 128;
    const Real tol = Real::two_pow(-80, prec);

    SUBCASE("N=60 suffices for x <= 0.3") {
        const auto table = fgh_table(60);
        for (const char* xs : {"0.1", "0.3"}) {
            const Real x = Real::from_string(xs, prec);
            const ClosedValues cv = closed_values(x, prec);
            CHECK((cv.f - taylor_sum(table, &CoeffTriple::f, x, 60, prec)).abs() < tol);
            CHECK((cv.g - taylor_sum(table, &CoeffTriple::g, x, 60, prec)).abs() < tol);
            CHECK((cv.h - taylor_sum(table, &CoeffTriple::h, x, 60, prec)).abs() < tol);
        }
    }
    SUBCASE("N=320 pushes the tail below 2^-80 on the whole grid") {
        const auto table = fgh_table(320);
        for (const char* xs : {"0.1", "0.3", "0.5", "0.8", "1.0"}) {
            const Real x = Real::from_string(xs, prec);
            const ClosedValues cv = closed_values(x, prec);
            CHECK((cv.f - taylor_sum(table, &CoeffTriple::f, x, 320, prec)).abs() < tol);
            CHECK((cv.g - taylor_sum(table, &CoeffTriple::g, x, 320, prec)).abs() < tol);
            CHECK((cv.h - taylor_sum(table, &CoeffTriple::h, x, 320, prec)).abs() < tol);
        }
    }
}

TEST_CASE("limit_stats constants") {
    const LimitStats stats = limit_stats(128);
    CHECK(stats.precision_bits == 128);
    CHECK((stats.mu - Real::from_string("7.9243724345131846288", 192)).abs() <
          Real::from_string("1e-18", 192));
    CHECK((stats.var - Real::from_string("27.981331405975792892", 192)).abs() <
          Real::from_string("1e-17", 192));
    CHECK((stats.fg_limit - Real::from_string("0.46108960953941176758", 192)).abs() <
          Real::from_string("1e-19", 192));
    CHECK((stats.gh_limit - Real::from_string("0.83051946655560967148", 192)).abs() <
          Real::from_string("1e-19", 192));
    CHECK((stats.pole_a - Real::from_string("1.2091995761561452337", 192)).abs() <
          Real::from_string("1e-18", 192));
}

TEST_CASE("coefficient ratios converge to the closed-form limits") {
    const long prec = 192;
    const auto table = fgh_table(200);
    const LimitStats stats = limit_stats(prec);
    const Real fg100 = Real::from_bigint(table[100].f, prec) / Real::from_bigint(table[100].g, prec);
    const Real gh100 = Real::from_bigint(table[100].g, prec) / Real::from_bigint(table[100].h, prec);
    CHECK((fg100 - stats.fg_limit).abs() < Real::from_string("1e-9", prec));
    CHECK((gh100 - stats.gh_limit).abs() < Real::from_string("1e-9", prec));
    // the subdominant singularity sits near 4.84, so n=200 is closer still
    const Real gh200 = Real::from_bigint(table[200].g, prec) / Real::from_bigint(table[200].h, prec);
    CHECK((gh200 - stats.gh_limit).abs() < Real::from_string("1e-30", prec));
}

TEST_CASE("e3_continuous at integer points") {
    const long prec = 128;
    const Real tol = Real::two_pow(-112, prec);
    CHECK((e3_continuous(Real::from_long(3, prec), prec) -
           Real::from_long(27, prec)).abs() < tol);
    CHECK((e3_continuous(Real::from_long(4, prec), prec) -
           Real::from_rational(e3(4), 192)).abs() < tol);
    CHECK((e3_continuous(Real::from_long(10, prec), prec) -
           Real::from_rational(Rational(big_pow(10, 10), BigInt(991980099)), 192)).abs() < tol);
}

TEST_CASE("continuity bridge for n in [3, 30]") {
    const long prec = 128;
    const Real tol = Real::two_pow(-(prec - 16), prec);
    for (long n = 3; n <= 30; ++n) {
        const Real lhs = e3_continuous(Real::from_long(n, prec), prec);
        const Real rhs = Real::from_rational(e3(n), prec + 64);
        CHECK((lhs - rhs).abs() < tol);
    }
}

TEST_CASE("e3_continuous domain and pole guards") {
    const long prec = 128;
    CHECK_THROWS_AS(e3_continuous(Real::from_string("2.999", prec), prec), std::domain_error);
    CHECK_NOTHROW(e3_continuous(Real::from_long(3, prec), prec));
}

TEST_CASE("e3_continuous decreases on the sampled grid") {
    // Checked on x = 3.0, 3.1, ..., 50.0 only; nothing stronger is claimed.
    const long prec = 128;
    const Rational step(BigInt(1), BigInt(10));
    Rational x(3);
    Real prev = e3_continuous(Real::from_rational(x, prec), prec);
    for (int i = 1; i <= 470; ++i) {
        x += step;
        const Real cur = e3_continuous(Real::from_rational(x, prec), prec);
        CHECK(cur < prev);
        prev = cur;
    }
}

TEST_CASE("e3_continuous approaches the limiting mean from above") {
    const long prec = 192;
    const LimitStats stats = limit_stats(prec);
    const Real at100 = e3_continuous(Real::from_long(100, prec), prec);
    const Real at1000 = e3_continuous(Real::from_long(1000, prec), prec);
    CHECK(at1000 > stats.mu);
    CHECK(at1000 - stats.mu < Real::from_string("0.02", prec));
    CHECK(at1000 - stats.mu < at100 - stats.mu);
}

TEST_CASE("Real basics") {
    CHECK_THROWS_AS(Real(52), std::invalid_argument);
    CHECK_THROWS_AS(Real::from_string("not a number", 64), std::invalid_argument);
    const Real x = Real::from_string("0.5", 64);
    CHECK(x.precision_bits() == 64);
    CHECK(x.to_double() == 0.5);
    CHECK(Real::two_pow(-3, 64).to_double() == 0.125);
    CHECK(Real::from_long(2, 64).sqrt().precision_bits() == 64);
    const Real pi = Real::pi(128);
    CHECK(pi.to_string(10) == std::string("3.141592654"));
    CHECK((Real::from_long(9, 80).sqrt() - Real::from_long(3, 80)).abs() <
          Real::two_pow(-70, 80));
    CHECK(Real::from_long(2, 64).pow(Real::from_long(10, 64)).to_double() == 1024.0);
}
