#pragma once

#include <string>
#include <vector>

#include "incrun/simulate.hpp"  // Execution

namespace incrun {

/// Mechanically checkable statements. The first seven are the CLI-facing
/// theorem names; `agreement` is the internal three-way evaluation check.
enum class Theorem {
    gcd,          // gcd(n^n, a_n(n)) equals the three-case formula
    residue,      // a_n(n) mod n^3 equals the case formula
    nu2,          // nu2(a_n(n)) = 3 + nu2(floor(n/12)) for n = 2 (mod 12)
    integrality,  // a_n(n) | n^n exactly when n = 3
    det,          // det(M_n) = n^n a_n(n) and det(H) = (-1)^{n+1} n^{2n-3}
    oracle,       // last entry of solve_expectations(n) equals e3(n)
    singlerec,    // n^3 (n-2) A_i(n) - n^3 B_i(n) = n^i a_i(n) for i in [2, n]
    agreement,    // a_eval = a_eval_fast = a_closed for i in [1, n]
};

const char* theorem_name(Theorem t);
/// Parse a CLI-facing theorem name (the seven public ones). Throws
/// std::invalid_argument otherwise.
Theorem theorem_from_name(const std::string& name);

struct Counterexample {
    long n = 0;
    std::string detail;
};

struct VerifyReport {
    Theorem theorem = Theorem::gcd;
    long max_n = 0;
    long cases_checked = 0;
    std::vector<Counterexample> counterexamples;  // sorted by n

    bool passed() const { return counterexamples.empty(); }
};

/// Run one theorem check for every applicable n <= max_n (n starts at 3,
/// except nu2 which walks n = 14, 26, ... only). The per-n checks are
/// independent, so the parallel mode sweeps them with OpenMP; both modes
/// return identical reports.
VerifyReport verify_theorem(Theorem theorem, long max_n, Execution mode = Execution::parallel);

}  // namespace incrun
