#include "incrun/verify.hpp"

#include <algorithm>
#include <cstddef>
#include <exception>
#include <stdexcept>

#include "incrun/errors.hpp"
#include "incrun/exact.hpp"
#include "incrun/markov.hpp"

namespace incrun {

const char* theorem_name(Theorem t) {
    switch (t) {
        case Theorem::gcd: return "gcd";
        case Theorem::residue: return "residue";
        case Theorem::nu2: return "nu2";
        case Theorem::integrality: return "integrality";
        case Theorem::det: return "det";
        case Theorem::oracle: return "oracle";
        case Theorem::singlerec: return "singlerec";
        case Theorem::agreement: return "agreement";
    }
    return "?";
}

Theorem theorem_from_name(const std::string& name) {
    for (Theorem t : {Theorem::gcd, Theorem::residue, Theorem::nu2, Theorem::integrality,
                      Theorem::det, Theorem::oracle, Theorem::singlerec}) {
        if (name == theorem_name(t)) {
            return t;
        }
    }
    throw std::invalid_argument("unknown theorem \"" + name + "\"");
}

namespace {

// Check a single n; empty string means the case holds.
std::string check_case(Theorem theorem, long n) {
    switch (theorem) {
        case Theorem::gcd: {
            const GcdReport r = gcd_report(n);
            if (r.gcd_actual != r.gcd_predicted) {
                return "gcd(n^n, a_n(n)) = " + r.gcd_actual.get_str() + ", formula predicts " +
                       r.gcd_predicted.get_str();
            }
            return {};
        }
        case Theorem::residue: {
            const BigInt a_n = a_eval(n, n);
            const BigInt n3 = BigInt(n) * n * n;
            BigInt measured;
            mpz_mod(measured.get_mpz_t(), a_n.get_mpz_t(), n3.get_mpz_t());
            const BigInt predicted = an_mod_n3_predicted(n);
            if (measured != predicted) {
                return "a_n(n) mod n^3 = " + measured.get_str() + ", case formula gives " +
                       predicted.get_str();
            }
            return {};
        }
        case Theorem::nu2: {
            const unsigned long measured = nu2(a_eval(n, n));
            const unsigned long predicted = 3 + nu2(BigInt(n / 12));
            if (measured != predicted) {
                return "nu2(a_n(n)) = " + std::to_string(measured) + ", expected " +
                       std::to_string(predicted);
            }
            return {};
        }
        case Theorem::integrality: {
            const bool is_integer = divides(a_eval(n, n), big_pow(n, static_cast<unsigned long>(n)));
            if (is_integer != (n == 3)) {
                return is_integer ? "E3(n) unexpectedly an integer"
                                  : "E3(3) should be the integer 27";
            }
            return {};
        }
        case Theorem::det: {
            const BigInt dm = det_mn(n);
            const BigInt expected_dm = big_pow(n, static_cast<unsigned long>(n)) * a_eval(n, n);
            if (dm != expected_dm) {
                return "det(M_n) = " + dm.get_str() + ", expected n^n a_n(n) = " +
                       expected_dm.get_str();
            }
            const BigInt dh = det_h(n);
            BigInt expected_dh = big_pow(n, static_cast<unsigned long>(2 * n - 3));
            if (n % 2 == 0) {
                expected_dh = -expected_dh;
            }
            if (dh != expected_dh) {
                return "det(H) = " + dh.get_str() + ", expected (-1)^(n+1) n^(2n-3) = " +
                       expected_dh.get_str();
            }
            return {};
        }
        case Theorem::oracle: {
            const MuVector mu = solve_expectations(n);
            const Rational expected = e3(n);
            if (mu.back() != expected) {
                return "mu_n = " + mu.back().to_string() + ", e3(n) = " + expected.to_string();
            }
            return {};
        }
        case Theorem::singlerec: {
            const BigInt n3 = BigInt(n) * n * n;
            BigInt n_pow_i = BigInt(n) * n;  // n^2
            for (long i = 2; i <= n; ++i) {
                const ABPair ab = ab_eval(n, i);
                const BigInt lhs = n3 * (n - 2) * ab.a_val - n3 * ab.b_val;
                const BigInt rhs = n_pow_i * a_eval(n, i);
                if (lhs != rhs) {
                    return "identity fails at i=" + std::to_string(i);
                }
                n_pow_i *= n;
            }
            return {};
        }
        case Theorem::agreement: {
            const BigInt x(n);
            BigInt prev = x - 1;
            BigInt cur = x * (x - 2);
            const BigInt c1 = 2 * x - 1;
            const BigInt c0 = x * x - x + 1;
            for (long i = 1; i <= n; ++i) {
                const BigInt& iterative = (i == 1) ? prev : cur;
                if (a_eval_fast(n, i) != iterative) {
                    return "a_eval_fast disagrees at i=" + std::to_string(i);
                }
                if (a_closed(n, i) != iterative) {
                    return "a_closed disagrees at i=" + std::to_string(i);
                }
                if (i >= 2 && i < n) {
                    BigInt next = c1 * cur - c0 * prev;
                    prev = std::move(cur);
                    cur = std::move(next);
                }
            }
            return {};
        }
    }
    return "unhandled theorem";
}

}  // namespace

VerifyReport verify_theorem(Theorem theorem, long max_n, Execution mode) {
    VerifyReport report;
    report.theorem = theorem;
    report.max_n = max_n;

    // nu2 only speaks about n = 2 (mod 12); everything else sweeps [3, max_n].
    std::vector<long> cases;
    if (theorem == Theorem::nu2) {
        for (long n = 14; n <= max_n; n += 12) {
            cases.push_back(n);
        }
    } else {
        for (long n = 3; n <= max_n; ++n) {
            cases.push_back(n);
        }
    }
    report.cases_checked = static_cast<long>(cases.size());

    const bool parallel = (mode == Execution::parallel);
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (std::size_t idx = 0; idx < cases.size(); ++idx) {
        try {
            const long n = cases[idx];
            std::string detail = check_case(theorem, n);
            if (!detail.empty()) {
#pragma omp critical
                report.counterexamples.push_back({n, std::move(detail)});
            }
        } catch (...) {
#pragma omp critical
            if (!failure) {
                failure = std::current_exception();
            }
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }

    std::sort(report.counterexamples.begin(), report.counterexamples.end(),
              [](const Counterexample& a, const Counterexample& b) { return a.n < b.n; });
    return report;
}

}  // namespace incrun
