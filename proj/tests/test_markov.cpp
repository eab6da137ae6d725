#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "incrun/errors.hpp"
#include "incrun/exact.hpp"
#include "incrun/markov.hpp"

using namespace incrun;

namespace {

// Independent 3x3 determinant by cofactor expansion, for cross-checking the
// Bareiss route.
BigInt det3(const std::vector<std::vector<BigInt>>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

}  // namespace

TEST_CASE("build_system at n=3") {
    const MarkovSystem sys = build_system(3);
    const std::vector<std::vector<BigInt>> expected_m = {
        {BigInt(8), BigInt(-7), BigInt(0)},
        {BigInt(-1), BigInt(8), BigInt(-7)},
        {BigInt(-3), BigInt(-3), BigInt(6)},
    };
    CHECK(sys.m == expected_m);
    CHECK(sys.v == std::vector<BigInt>{BigInt(3), BigInt(3), BigInt(9)});
    CHECK_THROWS_AS(build_system(2), std::domain_error);
}

TEST_CASE("build_system shape invariants") {
    for (long n : {3L, 5L, 9L, 17L}) {
        const MarkovSystem sys = build_system(n);
        const std::size_t sz = static_cast<std::size_t>(n);
        CHECK(sys.m[sz - 1][sz - 1] == BigInt(n) * n - n);
        CHECK(sys.v[sz - 1] == BigInt(n) * n);
        for (std::size_t i = 0; i < sz; ++i) {
            if (i + 1 < sz) {
                CHECK(sys.v[i] == n);
            }
            for (std::size_t j = i + 2; j < sz; ++j) {
                CHECK(sys.m[i][j] == 0);
            }
        }
    }
}

TEST_CASE("solve_expectations small cases, frozen") {
    const MuVector mu3 = solve_expectations(3);
    REQUIRE(mu3.size() == 3);
    CHECK(mu3[0] == Rational(24));
    CHECK(mu3[1] == Rational(27));
    CHECK(mu3[2] == Rational(27));

    const MuVector mu4 = solve_expectations(4);
    REQUIRE(mu4.size() == 4);
    CHECK(mu4[0] == Rational(BigInt(212), BigInt(15)));
    CHECK(mu4[1] == Rational(16));
    CHECK(mu4[2] == Rational(BigInt(256), BigInt(15)));
    CHECK(mu4[3] == Rational(BigInt(256), BigInt(15)));
}

TEST_CASE("mu vector: positivity, reduction, last entry equals e3") {
    for (long n = 3; n <= 20; ++n) {
        const MuVector mu = solve_expectations(n);
        REQUIRE(mu.size() == static_cast<std::size_t>(n));
        CHECK(mu.back() == e3(n));
        for (const Rational& m : mu) {
            CHECK(m > Rational(0));
            CHECK(big_gcd(m.numerator(), m.denominator()) == 1);
            CHECK(m.denominator() >= 1);
        }
    }
}

TEST_CASE("mu vector satisfies the defining expectation equations") {
    // mu_i = (2n-i)/n + (2n-i)/n^2 sum_{j<=i} mu_j + 1/n^2 sum_{j>i} (n-j+1) mu_j
    for (long n = 3; n <= 20; ++n) {
        const MuVector mu = solve_expectations(n);
        const BigInt n_squared = BigInt(n) * n;
        const Rational n2(n_squared);
        for (long i = 1; i <= n; ++i) {
            Rational low(0), high(0);
            for (long j = 1; j <= i; ++j) {
                low += mu[static_cast<std::size_t>(j - 1)];
            }
            for (long j = i + 1; j <= n; ++j) {
                high += Rational(n - j + 1) * mu[static_cast<std::size_t>(j - 1)];
            }
            const Rational rhs = Rational(BigInt(2 * n - i), BigInt(n)) +
                                 Rational(2 * n - i) / n2 * low + high / n2;
            CHECK(mu[static_cast<std::size_t>(i - 1)] == rhs);
        }
    }
}

TEST_CASE("det_mn") {
    CHECK(det_mn(3) == 27);
    CHECK(det_mn(3) == det3(build_system(3).m));  // independent cofactor route
    CHECK(det_mn(4) == 3840);                     // 4^4 * 15
    CHECK(det_mn(6) == BigInt(46656) * 3781);     // 6^6 * a_6(6)
    for (long n = 3; n <= 25; ++n) {
        CHECK(det_mn(n) == big_pow(n, static_cast<unsigned long>(n)) * a_eval(n, n));
    }
}

TEST_CASE("det_h") {
    // n=3: H = [[-1, 8], [-3, -3]] directly
    const MarkovSystem sys = build_system(3);
    CHECK(sys.m[1][0] * sys.m[2][1] - sys.m[1][1] * sys.m[2][0] == 27);
    CHECK(det_h(3) == 27);
    CHECK(det_h(4) == -1024);  // (-1)^5 4^5
    for (long n = 3; n <= 25; ++n) {
        BigInt expected = big_pow(n, static_cast<unsigned long>(2 * n - 3));
        if (n % 2 == 0) {
            expected = -expected;
        }
        CHECK(det_h(n) == expected);
        CHECK((det_h(n) > 0) == (n % 2 == 1));  // sign is (-1)^{n+1}
    }
}

TEST_CASE("linear algebra kernels on hand-built systems") {
    SUBCASE("bareiss on a singular matrix") {
        std::vector<std::vector<BigInt>> m = {
            {BigInt(1), BigInt(2), BigInt(3)},
            {BigInt(2), BigInt(4), BigInt(6)},
            {BigInt(7), BigInt(8), BigInt(9)},
        };
        CHECK(bareiss_determinant(m) == 0);
    }
    SUBCASE("bareiss needs a row swap") {
        std::vector<std::vector<BigInt>> m = {
            {BigInt(0), BigInt(1)},
            {BigInt(1), BigInt(0)},
        };
        CHECK(bareiss_determinant(m) == -1);
    }
    SUBCASE("rational solve rejects singular systems") {
        std::vector<std::vector<Rational>> a = {
            {Rational(1), Rational(2)},
            {Rational(2), Rational(4)},
        };
        std::vector<Rational> b = {Rational(1), Rational(2)};
        CHECK_THROWS_AS(solve_rational_system(a, b), SingularMatrixError);
    }
    SUBCASE("rational solve rejects size mismatch") {
        std::vector<std::vector<Rational>> a = {{Rational(1)}};
        CHECK_THROWS_AS(solve_rational_system(a, {}), std::invalid_argument);
    }
    SUBCASE("rational solve with a zero leading pivot") {
        std::vector<std::vector<Rational>> a = {
            {Rational(0), Rational(1)},
            {Rational(3), Rational(0)},
        };
        std::vector<Rational> b = {Rational(5), Rational(6)};
        const auto x = solve_rational_system(a, b);
        CHECK(x[0] == Rational(2));
        CHECK(x[1] == Rational(5));
    }
}
