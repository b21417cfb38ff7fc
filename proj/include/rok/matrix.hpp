// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <vector>

#include "rok/step.hpp"

namespace rok {

using cplx = std::complex<double>;

// Dense complex square matrix, row-major, value semantics.
class Matrix {
public:
    Matrix() = default;
    explicit Matrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, cplx(0.0, 0.0)) {}

    static Matrix identity(int n);
    static Matrix diag(const std::vector<double>& d);

    int dim() const { return n_; }
    cplx& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    const cplx& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

    Matrix adjoint() const;
    cplx trace() const;
    double frobenius() const;
    double max_abs() const;
    bool is_hermitian(double tol = 1e-12) const;

    Matrix& operator+=(const Matrix& other);
    Matrix& operator-=(const Matrix& other);
    Matrix& operator*=(cplx c);

    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(Matrix a, cplx c) { return a *= c; }
    friend Matrix operator*(cplx c, Matrix a) { return a *= c; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);

private:
    int n_ = 0;
    std::vector<cplx> a_;
};

Matrix kron(const Matrix& a, const Matrix& b);
Matrix commutator(const Matrix& a, const Matrix& b);
double max_abs_diff(const Matrix& a, const Matrix& b);

// Eigenvalues of a Hermitian matrix by cyclic Jacobi sweeps; converges when
// the off-diagonal Frobenius mass drops under 1e-13 * max(1, ||A||_F).
// Returns eigenvalues sorted descending.
std::vector<double> hermitian_eigenvalues(const Matrix& h);

enum class TraceMode { Counting, Normalized };

struct HermitianElement {
    Matrix m;
    TraceMode mode = TraceMode::Counting;
    double trace_weight() const { return mode == TraceMode::Counting ? 1.0 : 1.0 / m.dim(); }
};

// mu(A): decreasing eigenvalues of |A| with plateau length 1 (counting) or
// 1/d (normalized).  Works for any square matrix via |A| = sqrt(A*A).
DecreasingStep singular_values(const Matrix& a, TraceMode mode = TraceMode::Counting);
DecreasingStep singular_values(const HermitianElement& a);

// Schatten p-norm through mu
double schatten_norm(const Matrix& a, double p);

}  // namespace rok
