#pragma once

#include <vector>

#include "ambiforge/common.hpp"

namespace ambiforge::linalg {

/// Dense complex matrix, row-major.
struct CMat {
    int rows = 0, cols = 0;
    std::vector<cplx> a;

    CMat() = default;
    CMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    cplx& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const cplx& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    static CMat identity(int n);
    CMat adjoint() const;  // conjugate transpose
};

CMat matmul(const CMat& A, const CMat& B);

/// A * B^H without forming B^H.
CMat matmul_adjoint(const CMat& A, const CMat& B);

/// Solves A X = B in place (A square, partial pivoting). Throws on a
/// numerically singular pivot.
CMat lu_solve(CMat A, CMat B);

/// Eigenvalues of a Hermitian matrix by cyclic Jacobi, ascending order.
std::vector<double> hermitian_eigenvalues(CMat A);

/// Largest singular value of an arbitrary complex matrix.
double sigma_max(const CMat& A);

double frobenius_norm(const CMat& A);

}  // namespace ambiforge::linalg
