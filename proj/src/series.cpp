#include "incrun/series.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>

#include "incrun/errors.hpp"

namespace incrun {

std::vector<CoeffTriple> fgh_table(long max_n, Execution mode) {
    if (max_n < 0) {
        throw std::domain_error("fgh_table: max_n must be >= 0");
    }
    const std::size_t size = static_cast<std::size_t>(max_n) + 1;
    std::vector<BigInt> f(size), g(size), h(size);
    f[0] = g[0] = h[0] = 1;
    if (max_n >= 1) {
        f[1] = 0;
        g[1] = 0;
        h[1] = 1;
    }

    const bool parallel = (mode == Execution::parallel);
    // Pascal row, updated in place: after the update for step n it holds
    // C(n, 0..n).
    std::vector<BigInt> binom(size, BigInt(0));
    binom[0] = 1;

    for (long n = 1; n < max_n; ++n) {
        const std::size_t un = static_cast<std::size_t>(n);
        binom[un] = 1;
        for (std::size_t k = un - 1; k >= 1; --k) {
            binom[k] += binom[k - 1];
        }

        BigInt conv_f = 0, conv_g = 0, conv_h = 0;
#pragma omp parallel if (parallel && n > 96)
        {
            BigInt part_f = 0, part_g = 0, part_h = 0;
#pragma omp for schedule(static) nowait
            for (long k = 1; k <= n - 1; ++k) {
                const std::size_t uk = static_cast<std::size_t>(k);
                const BigInt w = binom[uk] * h[uk];
                part_f += w * f[un - uk];
                part_g += w * g[un - uk];
                part_h += w * h[un - uk];
            }
#pragma omp critical
            {
                // Integer addition commutes, so the merge order is free.
                conv_f += part_f;
                conv_g += part_g;
                conv_h += part_h;
            }
        }

        f[un + 1] = f[un] + g[un] + conv_f;
        g[un + 1] = g[un] + h[un] + conv_g;
        h[un + 1] = h[un] + conv_h;
    }

    std::vector<CoeffTriple> table;
    table.reserve(size);
    for (long n = 0; n <= max_n; ++n) {
        const std::size_t un = static_cast<std::size_t>(n);
        table.push_back({n, f[un], g[un], h[un]});
    }
    return table;
}

PgfTable pgf(long max_n) {
    if (max_n < 0) {
        throw std::domain_error("pgf: max_n must be >= 0");
    }
    const std::vector<CoeffTriple> fgh = fgh_table(max_n);
    PgfTable table;
    table.coeffs.reserve(static_cast<std::size_t>(max_n) + 1);
    BigInt factorial = 1;
    for (long n = 0; n <= max_n; ++n) {
        if (n > 0) {
            factorial *= n;
        }
        // p(0) = 0: the walk needs at least three draws, while f(0) = 1 by
        // the generating-function convention.
        Rational p = (n == 0) ? Rational(0)
                              : Rational(fgh[static_cast<std::size_t>(n)].f, factorial);
        table.sum_p += p;
        table.sum_np += Rational(n) * p;
        table.sum_n2p += Rational(n) * Rational(n) * p;
        table.coeffs.push_back({n, std::move(p)});
    }
    return table;
}

namespace {

struct Workspace {
    long prec;
    Real sqrt3;
    Real half;

    explicit Workspace(long precision_bits)
        : prec(precision_bits),
          sqrt3(Real::from_long(3, precision_bits).sqrt()),
          half(Real::from_rational(Rational(BigInt(1), BigInt(2)), precision_bits)) {}

    Real at(long v) const { return Real::from_long(v, prec); }
};

}  // namespace

ClosedValues closed_values(const Real& x, long precision_bits) {
    const Workspace w(precision_bits);
    // Re-round the input once so everything runs at the working precision.
    const Real xw = x.to_precision(precision_bits);
    const Real theta = Real::pi(precision_bits) / w.at(6) + xw * w.sqrt3 * w.half;
    const Real cos_theta = theta.cos();
    if (cos_theta.abs() < Real::two_pow(-(precision_bits / 2), precision_bits)) {
        throw PoleProximityError(
            "closed_values: x within 2^(-precision/2) of a pole of sec/tan (x near "
            "2*pi*sqrt(3)/9 or a translate)");
    }
    const Real sec_theta = w.at(1) / cos_theta;
    const Real half_sqrt3 = w.sqrt3 * w.half;
    const Real exp_half_x = (xw * w.half).exp();

    ClosedValues out{Real(precision_bits), Real(precision_bits), Real(precision_bits)};
    out.h = w.half + half_sqrt3 * theta.tan();
    out.g = sec_theta * (half_sqrt3 * exp_half_x - (xw * half_sqrt3).sin());
    out.f = w.at(2) + half_sqrt3 * exp_half_x * (xw - w.at(1)) * sec_theta;
    return out;
}

LimitStats limit_stats(long precision_bits) {
    const Workspace w(precision_bits);
    const Real half_sqrt3 = w.sqrt3 * w.half;
    const Real s = half_sqrt3.sin();
    const Real c = half_sqrt3.cos();
    const Real d = w.sqrt3 * c - s;
    const Real e = w.at(1).exp();
    const Real sqrt_e = e.sqrt();
    const Real sqrt_3e = (w.at(3) * e).sqrt();

    LimitStats stats{Real(precision_bits), Real(precision_bits), Real(precision_bits),
                     Real(precision_bits), Real(precision_bits), precision_bits};
    stats.mu = sqrt_3e / d;
    stats.var = (w.at(9) * sqrt_e * c + sqrt_3e * s - w.at(3) * e) / (d * d);
    stats.pole_a = w.at(2) * Real::pi(precision_bits) * w.sqrt3 / w.at(9);
    const Real exp_half_a = (stats.pole_a * w.half).exp();
    stats.fg_limit = (stats.pole_a - w.at(1)) / (w.at(1) - w.at(1) / exp_half_a);
    stats.gh_limit = exp_half_a - w.at(1);
    return stats;
}

Real e3_continuous(const Real& x, long precision_bits) {
    const Workspace w(precision_bits);
    const Real xw = x.to_precision(precision_bits);
    if (xw < w.at(3)) {
        throw std::domain_error("e3_continuous: x must be >= 3");
    }
    const Real one = w.at(1);
    const Real alpha = (xw - one) * (w.sqrt3 / (w.at(2) * xw - one)).atan();
    const Real trig = (xw - one) * alpha.cos() - (xw + one) * alpha.sin() / w.sqrt3;
    if (trig.abs() < Real::two_pow(-(precision_bits / 2), precision_bits)) {
        throw PoleProximityError("e3_continuous: denominator within 2^(-precision/2) of zero");
    }
    // x >= 3 keeps both logarithms of positive arguments.
    const Real x_to_x = (xw * xw.log()).exp();
    const Real quad = xw * xw - xw + one;
    const Real quad_pow = (((xw - one) * w.half) * quad.log()).exp();
    return x_to_x / (quad_pow * trig);
}

}  // namespace incrun
