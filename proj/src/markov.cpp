#include "incrun/markov.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>

#include "incrun/errors.hpp"

namespace incrun {

MarkovSystem build_system(long n) {
    if (n < 3) {
        throw std::domain_error("build_system: n must be >= 3");
    }
    const std::size_t sz = static_cast<std::size_t>(n);
    MarkovSystem sys;
    sys.n = n;
    sys.m.assign(sz, std::vector<BigInt>(sz, BigInt(0)));
    sys.v.assign(sz, BigInt(n));
    const BigInt nn = BigInt(n) * n;
    for (std::size_t i = 0; i < sz; ++i) {
        for (std::size_t j = 0; j < sz; ++j) {
            if (i == sz - 1 && j == sz - 1) {
                sys.m[i][j] = nn - n;
            } else if (i == j) {
                sys.m[i][j] = nn - 1;
            } else if (j == i + 1) {
                sys.m[i][j] = BigInt(n) - nn - 1;
            } else if (j > i + 1) {
                sys.m[i][j] = 0;
            } else if (i == sz - 1) {
                sys.m[i][j] = -n;
            } else {
                sys.m[i][j] = -1;
            }
        }
    }
    sys.v[sz - 1] = nn;
    return sys;
}

std::vector<Rational> solve_rational_system(std::vector<std::vector<Rational>> a,
                                            std::vector<Rational> b) {
    const std::size_t n = a.size();
    if (b.size() != n) {
        throw std::invalid_argument("solve_rational_system: size mismatch");
    }
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == Rational(0)) {
            ++pivot;
        }
        if (pivot == n) {
            throw SingularMatrixError("solve_rational_system: no nonzero pivot in column " +
                                      std::to_string(col));
        }
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            std::swap(b[pivot], b[col]);
        }
        for (std::size_t row = col + 1; row < n; ++row) {
            if (a[row][col] == Rational(0)) {
                continue;
            }
            const Rational factor = a[row][col] / a[col][col];
            for (std::size_t j = col; j < n; ++j) {
                a[row][j] -= factor * a[col][j];
            }
            b[row] -= factor * b[col];
        }
    }
    std::vector<Rational> x(n, Rational(0));
    for (std::size_t row = n; row-- > 0;) {
        Rational acc = b[row];
        for (std::size_t j = row + 1; j < n; ++j) {
            acc -= a[row][j] * x[j];
        }
        x[row] = acc / a[row][row];
    }
    return x;
}

MuVector solve_expectations(long n) {
    const MarkovSystem sys = build_system(n);
    const std::size_t sz = static_cast<std::size_t>(n);
    std::vector<std::vector<Rational>> a(sz, std::vector<Rational>(sz));
    std::vector<Rational> b(sz);
    for (std::size_t i = 0; i < sz; ++i) {
        for (std::size_t j = 0; j < sz; ++j) {
            a[i][j] = Rational(sys.m[i][j]);
        }
        b[i] = Rational(sys.v[i]);
    }
    return solve_rational_system(std::move(a), std::move(b));
}

BigInt bareiss_determinant(std::vector<std::vector<BigInt>> matrix) {
    const std::size_t n = matrix.size();
    if (n == 0) {
        return 1;
    }
    for (const auto& row : matrix) {
        if (row.size() != n) {
            throw std::invalid_argument("bareiss_determinant: matrix not square");
        }
    }
    int sign = 1;
    BigInt prev_pivot = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (matrix[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && matrix[swap_row][k] == 0) {
                ++swap_row;
            }
            if (swap_row == n) {
                return 0;
            }
            std::swap(matrix[k], matrix[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                // Sylvester's identity guarantees the division is exact.
                BigInt t = matrix[i][j] * matrix[k][k] - matrix[i][k] * matrix[k][j];
                mpz_divexact(matrix[i][j].get_mpz_t(), t.get_mpz_t(), prev_pivot.get_mpz_t());
            }
            matrix[i][k] = 0;
        }
        prev_pivot = matrix[k][k];
    }
    return sign * matrix[n - 1][n - 1];
}

BigInt det_mn(long n) {
    return bareiss_determinant(build_system(n).m);
}

BigInt det_h(long n) {
    const MarkovSystem sys = build_system(n);
    const std::size_t sz = static_cast<std::size_t>(n);
    std::vector<std::vector<BigInt>> h(sz - 1, std::vector<BigInt>(sz - 1));
    for (std::size_t i = 0; i + 1 < sz; ++i) {
        for (std::size_t j = 0; j + 1 < sz; ++j) {
            h[i][j] = sys.m[i + 1][j];
        }
    }
    return bareiss_determinant(std::move(h));
}

}  // namespace incrun
