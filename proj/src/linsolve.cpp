#include "somos/linsolve.hpp"

#include <cstddef>

namespace somos {

std::vector<Rational> solve_linear_exact(std::vector<std::vector<Rational>> M,
                                         std::vector<Rational> rhs)
{
    const std::size_t n = M.size();
    if (rhs.size() != n) {
        throw validation_error("rhs length does not match matrix size");
    }
    for (const auto &row : M) {
        if (row.size() != n) {
            throw validation_error("matrix is not square");
        }
    }
    if (n == 0) {
        return {};
    }

    // Clear denominators row by row; scaling a row and its rhs entry leaves
    // the solution unchanged.
    std::vector<std::vector<Integer>> A(n, std::vector<Integer>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        Integer l(1);
        for (std::size_t j = 0; j < n; ++j) {
            l = lcm(l, denom(M[i][j]));
        }
        l = lcm(l, denom(rhs[i]));
        for (std::size_t j = 0; j < n; ++j) {
            A[i][j] = numer(M[i][j]) * (l / denom(M[i][j]));
        }
        A[i][n] = numer(rhs[i]) * (l / denom(rhs[i]));
    }

    // Bareiss fraction-free elimination on the augmented matrix.
    Integer prev(1);
    std::size_t rank = 0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = rank;
        while (pivot < n && A[pivot][k] == 0) {
            ++pivot;
        }
        if (pivot == n) {
            continue; // structurally rank-deficient in this column
        }
        std::swap(A[rank], A[pivot]);
        for (std::size_t i = rank + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j <= n; ++j) {
                A[i][j] = (A[rank][k] * A[i][j] - A[i][k] * A[rank][j]) / prev;
            }
            A[i][k] = 0;
        }
        prev = A[rank][k];
        ++rank;
        if (rank == n) {
            break;
        }
    }
    if (rank < n) {
        throw singular_matrix_error(rank, n - rank);
    }

    // Back substitution over the rationals.
    std::vector<Rational> x(n);
    // Column index of the pivot in row i is found by scanning (rows stay in
    // elimination order; with full rank the profile is upper triangular but
    // pivots may sit right of the diagonal after skipped columns -- with full
    // rank every column hosts a pivot, so it is exactly the diagonal).
    for (std::size_t ii = n; ii-- > 0;) {
        Rational s(A[ii][n]);
        for (std::size_t j = ii + 1; j < n; ++j) {
            s -= Rational(A[ii][j]) * x[j];
        }
        x[ii] = s / Rational(A[ii][ii]);
    }
    return x;
}

}
