#include "ambiforge/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace ambiforge::linalg {

CMat CMat::identity(int n) {
    CMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

CMat CMat::adjoint() const {
    CMat m(cols, rows);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) m.at(c, r) = std::conj(at(r, c));
    return m;
}

CMat matmul(const CMat& A, const CMat& B) {
    require(A.cols == B.rows, "matmul: shape mismatch");
    CMat C(A.rows, B.cols);
    for (int i = 0; i < A.rows; ++i) {
        for (int k = 0; k < A.cols; ++k) {
            cplx aik = A.at(i, k);
            if (aik == cplx(0.0, 0.0)) continue;
            const cplx* brow = &B.a[static_cast<size_t>(k) * B.cols];
            cplx* crow = &C.a[static_cast<size_t>(i) * C.cols];
            for (int j = 0; j < B.cols; ++j) crow[j] += aik * brow[j];
        }
    }
    return C;
}

CMat matmul_adjoint(const CMat& A, const CMat& B) {
    require(A.cols == B.cols, "matmul_adjoint: shape mismatch");
    CMat C(A.rows, B.rows);
    for (int i = 0; i < A.rows; ++i) {
        for (int j = 0; j < B.rows; ++j) {
            cplx s = 0.0;
            const cplx* arow = &A.a[static_cast<size_t>(i) * A.cols];
            const cplx* brow = &B.a[static_cast<size_t>(j) * B.cols];
            for (int k = 0; k < A.cols; ++k) s += arow[k] * std::conj(brow[k]);
            C.at(i, j) = s;
        }
    }
    return C;
}

CMat lu_solve(CMat A, CMat B) {
    require(A.rows == A.cols, "lu_solve: A must be square");
    require(A.rows == B.rows, "lu_solve: dimension mismatch");
    int n = A.rows;

    double scale = 0.0;
    for (const auto& v : A.a) scale = std::max(scale, std::abs(v));
    require(scale > 0.0, "lu_solve: zero matrix");

    for (int k = 0; k < n; ++k) {
        int piv = k;
        double best = std::abs(A.at(k, k));
        for (int r = k + 1; r < n; ++r) {
            double m = std::abs(A.at(r, k));
            if (m > best) {
                best = m;
                piv = r;
            }
        }
        require(best > scale * 1e-300, "lu_solve: singular matrix");
        if (piv != k) {
            for (int c = 0; c < n; ++c) std::swap(A.at(k, c), A.at(piv, c));
            for (int c = 0; c < B.cols; ++c) std::swap(B.at(k, c), B.at(piv, c));
        }
        cplx inv_piv = 1.0 / A.at(k, k);
        for (int r = k + 1; r < n; ++r) {
            cplx f = A.at(r, k) * inv_piv;
            if (f == cplx(0.0, 0.0)) continue;
            A.at(r, k) = f;
            for (int c = k + 1; c < n; ++c) A.at(r, c) -= f * A.at(k, c);
            for (int c = 0; c < B.cols; ++c) B.at(r, c) -= f * B.at(k, c);
        }
    }
    for (int k = n - 1; k >= 0; --k) {
        cplx inv_piv = 1.0 / A.at(k, k);
        for (int c = 0; c < B.cols; ++c) {
            cplx s = B.at(k, c);
            for (int j = k + 1; j < n; ++j) s -= A.at(k, j) * B.at(j, c);
            B.at(k, c) = s * inv_piv;
        }
    }
    return B;
}

std::vector<double> hermitian_eigenvalues(CMat A) {
    require(A.rows == A.cols, "hermitian_eigenvalues: square matrix required");
    int n = A.rows;
    if (n == 0) return {};
    if (n == 1) return {A.at(0, 0).real()};

    // Cyclic Jacobi with a unitary phase+rotation per sweep target.
    for (int sweep = 0; sweep < 60; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off += std::norm(A.at(p, q));
        double f = frobenius_norm(A);
        if (off <= f * f * 1e-30 + 1e-300) break;

        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                cplx apq = A.at(p, q);
                double g = std::abs(apq);
                if (g < 1e-300) continue;
                double app = A.at(p, p).real();
                double aqq = A.at(q, q).real();
                cplx phase = apq / g;  // a_pq = g * phase

                // Rotation angle for the equivalent real 2x2 problem.
                double theta = 0.5 * std::atan2(2.0 * g, app - aqq);
                double c = std::cos(theta);
                double s = std::sin(theta);
                cplx sp = s * phase;

                // A <- J^H A J with J acting on columns p, q:
                // col_p' = c*col_p + conj(sp)*col_q ; col_q' = -sp*col_p + c*col_q
                for (int r = 0; r < n; ++r) {
                    cplx arp = A.at(r, p), arq = A.at(r, q);
                    A.at(r, p) = c * arp + std::conj(sp) * arq;
                    A.at(r, q) = -sp * arp + c * arq;
                }
                for (int col = 0; col < n; ++col) {
                    cplx apc = A.at(p, col), aqc = A.at(q, col);
                    A.at(p, col) = c * apc + sp * aqc;
                    A.at(q, col) = -std::conj(sp) * apc + c * aqc;
                }
            }
        }
    }
    std::vector<double> ev(n);
    for (int i = 0; i < n; ++i) ev[i] = A.at(i, i).real();
    std::sort(ev.begin(), ev.end());
    return ev;
}

double sigma_max(const CMat& A) {
    if (A.rows == 0 || A.cols == 0) return 0.0;
    // Work on the smaller Gram matrix.
    CMat G = (A.rows <= A.cols) ? matmul_adjoint(A, A) : matmul(A.adjoint(), A);
    auto ev = hermitian_eigenvalues(std::move(G));
    double m = ev.empty() ? 0.0 : ev.back();
    return m > 0.0 ? std::sqrt(m) : 0.0;
}

double frobenius_norm(const CMat& A) {
    double s = 0.0;
    for (const auto& v : A.a) s += std::norm(v);
    return std::sqrt(s);
}

}  // namespace ambiforge::linalg
