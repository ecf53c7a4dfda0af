#ifndef DTEV_LINALG_HPP
#define DTEV_LINALG_HPP

#include <complex>
#include <cstddef>
#include <vector>

#include "dtev/errors.hpp"
#include "dtev/poly.hpp"

namespace dtev {

// Small dense complex matrix, row-major.
struct DenseMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Complex> entries;

    DenseMatrix() = default;
    DenseMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<std::size_t>(r) * c) {}

    Complex& at(int r, int c) { return entries[static_cast<std::size_t>(r) * cols + c]; }
    const Complex& at(int r, int c) const { return entries[static_cast<std::size_t>(r) * cols + c]; }
};

DenseMatrix matmul(const DenseMatrix& A, const DenseMatrix& B);

// Solve A x = rhs by LU with partial pivoting. Throws SingularMatrix when
// a pivot magnitude falls below 1e-13 * max|A entry|.
std::vector<Complex> solve_linear(const DenseMatrix& A, const std::vector<Complex>& rhs);

// Product of LU pivots with the row-exchange sign; 0 for singular input.
Complex determinant(const DenseMatrix& A);

// (n+1)x(n+1) Hankel matrix with entry (i, j) = M_{i+j-1} (1-based), i.e.
// entry (r, c) = M[r + c] 0-based. Requires length(M) >= 2n + 1.
DenseMatrix hankel_matrix(const std::vector<Complex>& M, int n);

}  // namespace dtev

#endif  // DTEV_LINALG_HPP
