#pragma once

#include <vector>

#include "incrun/bigint.hpp"
#include "incrun/rational.hpp"

namespace incrun {

/// The exact linear system M_n U_n = V_n whose solution holds the expected
/// remaining rolls mu_i for each "last roll was i" state.
///
/// M is near-lower-Hessenberg: m[i][j] = 0 whenever j > i+1, the last
/// diagonal entry is n^2-n, the other diagonal entries n^2-1, the
/// superdiagonal n-n^2-1, the last row -n elsewhere, and -1 below the
/// diagonal otherwise. v = (n, ..., n, n^2).
struct MarkovSystem {
    long n = 0;
    std::vector<std::vector<BigInt>> m;
    std::vector<BigInt> v;
};

MarkovSystem build_system(long n);

/// Exact solution vector (mu_1, ..., mu_n). The last entry equals e3(n).
using MuVector = std::vector<Rational>;

/// Solve M_n U_n = V_n by exact Gaussian elimination over Rational,
/// pivoting on the first nonzero entry. Throws SingularMatrixError if no
/// nonzero pivot exists (cannot happen for n >= 3).
MuVector solve_expectations(long n);

/// det(M_n), by fraction-free (Bareiss) elimination. Equals n^n a_n(n).
BigInt det_mn(long n);

/// Determinant of the (n-1)x(n-1) matrix H obtained by deleting the top row
/// and rightmost column of M_n. Equals (-1)^{n+1} n^{2n-3}.
BigInt det_h(long n);

// Exact linear-algebra kernels behind the operations above, exposed so the
// tests can drive them on hand-built systems.

/// Fraction-free determinant of a square BigInt matrix.
BigInt bareiss_determinant(std::vector<std::vector<BigInt>> matrix);

/// Solve A x = b over the rationals; first-nonzero pivoting.
/// Throws SingularMatrixError when A is singular.
std::vector<Rational> solve_rational_system(std::vector<std::vector<Rational>> a,
                                            std::vector<Rational> b);

}  // namespace incrun
