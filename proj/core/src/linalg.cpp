#include "dtev/linalg.hpp"

#include <cmath>
#include <utility>

namespace dtev {

namespace {

constexpr double kPivotRel = 1e-13;

double matrix_scale(const DenseMatrix& A) {
    double s = 0.0;
    for (const auto& z : A.entries) s = std::max(s, std::abs(z));
    return s;
}

// In-place LU with partial pivoting. Returns the permutation sign, or 0
// when a pivot falls below threshold (threshold 0 never triggers).
int lu_decompose(DenseMatrix& A, std::vector<int>& perm, double threshold) {
    const int n = A.rows;
    perm.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    int sign = 1;

    for (int k = 0; k < n; ++k) {
        int pivot = k;
        double best = std::abs(A.at(k, k));
        for (int i = k + 1; i < n; ++i) {
            const double m = std::abs(A.at(i, k));
            if (m > best) {
                best = m;
                pivot = i;
            }
        }
        if (best <= threshold) return 0;
        if (pivot != k) {
            for (int j = 0; j < n; ++j) std::swap(A.at(k, j), A.at(pivot, j));
            std::swap(perm[static_cast<std::size_t>(k)], perm[static_cast<std::size_t>(pivot)]);
            sign = -sign;
        }
        if (std::abs(A.at(k, k)) == 0.0) return 0;
        for (int i = k + 1; i < n; ++i) {
            const Complex m = A.at(i, k) / A.at(k, k);
            A.at(i, k) = m;
            for (int j = k + 1; j < n; ++j) A.at(i, j) -= m * A.at(k, j);
        }
    }
    return sign;
}

}  // namespace

DenseMatrix matmul(const DenseMatrix& A, const DenseMatrix& B) {
    if (A.cols != B.rows) throw InvalidInput("matmul: inner dimensions differ");
    DenseMatrix C(A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i)
        for (int k = 0; k < A.cols; ++k) {
            const Complex aik = A.at(i, k);
            for (int j = 0; j < B.cols; ++j) C.at(i, j) += aik * B.at(k, j);
        }
    return C;
}

std::vector<Complex> solve_linear(const DenseMatrix& A, const std::vector<Complex>& rhs) {
    if (A.rows != A.cols) throw InvalidInput("solve_linear: matrix must be square");
    if (static_cast<int>(rhs.size()) != A.rows)
        throw InvalidInput("solve_linear: rhs length does not match matrix size");

    const int n = A.rows;
    DenseMatrix LU = A;
    std::vector<int> perm;
    if (lu_decompose(LU, perm, kPivotRel * matrix_scale(A)) == 0)
        throw SingularMatrix("solve_linear: pivot below 1e-13 * matrix scale");

    std::vector<Complex> x(static_cast<std::size_t>(n));
    // Ly = P rhs
    for (int i = 0; i < n; ++i) {
        Complex acc = rhs[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
        for (int j = 0; j < i; ++j) acc -= LU.at(i, j) * x[static_cast<std::size_t>(j)];
        x[static_cast<std::size_t>(i)] = acc;
    }
    // Ux = y
    for (int i = n - 1; i >= 0; --i) {
        Complex acc = x[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < n; ++j) acc -= LU.at(i, j) * x[static_cast<std::size_t>(j)];
        x[static_cast<std::size_t>(i)] = acc / LU.at(i, i);
    }
    return x;
}

Complex determinant(const DenseMatrix& A) {
    if (A.rows != A.cols) throw InvalidInput("determinant: matrix must be square");
    if (A.rows == 0) return Complex(1.0);
    DenseMatrix LU = A;
    std::vector<int> perm;
    const int sign = lu_decompose(LU, perm, 0.0);
    if (sign == 0) return Complex(0.0);
    Complex det(static_cast<double>(sign));
    for (int i = 0; i < A.rows; ++i) det *= LU.at(i, i);
    return det;
}

DenseMatrix hankel_matrix(const std::vector<Complex>& M, int n) {
    if (n < 0) throw InvalidInput("hankel_matrix: negative size");
    if (static_cast<int>(M.size()) < 2 * n + 1)
        throw InsufficientCoefficients("hankel_matrix: need at least 2n+1 coefficients");
    DenseMatrix H(n + 1, n + 1);
    for (int r = 0; r <= n; ++r)
        for (int c = 0; c <= n; ++c) H.at(r, c) = M[static_cast<std::size_t>(r + c)];
    return H;
}

}  // namespace dtev
