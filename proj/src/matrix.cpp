// SPDX-License-Identifier: Apache-2.0
#include "rok/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace rok {

Matrix Matrix::identity(int n) {
    Matrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

Matrix Matrix::diag(const std::vector<double>& d) {
    Matrix m(static_cast<int>(d.size()));
    for (int i = 0; i < m.dim(); ++i) m.at(i, i) = d[static_cast<std::size_t>(i)];
    return m;
}

Matrix Matrix::adjoint() const {
    Matrix m(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) m.at(j, i) = std::conj(at(i, j));
    return m;
}

cplx Matrix::trace() const {
    cplx t = 0.0;
    for (int i = 0; i < n_; ++i) t += at(i, i);
    return t;
}

double Matrix::frobenius() const {
    double s = 0.0;
    for (const cplx& v : a_) s += std::norm(v);
    return std::sqrt(s);
}

double Matrix::max_abs() const {
    double m = 0.0;
    for (const cplx& v : a_) m = std::max(m, std::abs(v));
    return m;
}

bool Matrix::is_hermitian(double tol) const {
    for (int i = 0; i < n_; ++i)
        for (int j = i; j < n_; ++j)
            if (std::abs(at(i, j) - std::conj(at(j, i))) > tol * std::max(1.0, max_abs()))
                return false;
    return true;
}

Matrix& Matrix::operator+=(const Matrix& other) {
    require(n_ == other.n_, "matrix size mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += other.a_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
    require(n_ == other.n_, "matrix size mismatch");
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= other.a_[i];
    return *this;
}

Matrix& Matrix::operator*=(cplx c) {
    for (cplx& v : a_) v *= c;
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    require(a.n_ == b.n_, "matrix size mismatch");
    const int n = a.n_;
    Matrix c(n);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            const cplx aik = a.at(i, k);
            if (aik == cplx(0.0, 0.0)) continue;
            for (int j = 0; j < n; ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

Matrix kron(const Matrix& a, const Matrix& b) {
    const int na = a.dim(), nb = b.dim();
    Matrix c(na * nb);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j) {
            const cplx aij = a.at(i, j);
            if (aij == cplx(0.0, 0.0)) continue;
            for (int k = 0; k < nb; ++k)
                for (int l = 0; l < nb; ++l)
                    c.at(i * nb + k, j * nb + l) = aij * b.at(k, l);
        }
    return c;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

double max_abs_diff(const Matrix& a, const Matrix& b) {
    require(a.dim() == b.dim(), "matrix size mismatch");
    double m = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j) m = std::max(m, std::abs(a.at(i, j) - b.at(i, j)));
    return m;
}

namespace {

double offdiag_mass(const Matrix& h) {
    double s = 0.0;
    for (int i = 0; i < h.dim(); ++i)
        for (int j = 0; j < h.dim(); ++j)
            if (i != j) s += std::norm(h.at(i, j));
    return std::sqrt(s);
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const Matrix& h0) {
    require(h0.dim() >= 1 && h0.dim() <= 128, "hermitian_eigenvalues: dimension out of range");
    require(h0.is_hermitian(1e-12), "hermitian_eigenvalues: matrix is not Hermitian");
    Matrix h = h0;
    const int n = h.dim();
    const double tol = 1e-13 * std::max(1.0, h.frobenius());
    for (int sweep = 0; sweep < 100 && offdiag_mass(h) > tol; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const cplx hpq = h.at(p, q);
                const double b = std::abs(hpq);
                if (b < 1e-300) continue;
                const cplx phase = hpq / b;  // e^{i beta}
                const double app = h.at(p, p).real();
                const double aqq = h.at(q, q).real();
                const double theta = 0.5 * std::atan2(2.0 * b, app - aqq);
                const double c = std::cos(theta), s = std::sin(theta);
                // right-multiply by the plane rotation
                for (int i = 0; i < n; ++i) {
                    const cplx hip = h.at(i, p), hiq = h.at(i, q);
                    h.at(i, p) = c * hip + s * std::conj(phase) * hiq;
                    h.at(i, q) = -s * phase * hip + c * hiq;
                }
                // left-multiply by its adjoint
                for (int j = 0; j < n; ++j) {
                    const cplx hpj = h.at(p, j), hqj = h.at(q, j);
                    h.at(p, j) = c * hpj + s * phase * hqj;
                    h.at(q, j) = -s * std::conj(phase) * hpj + c * hqj;
                }
            }
        }
    }
    std::vector<double> eig(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) eig[static_cast<std::size_t>(i)] = h.at(i, i).real();
    std::sort(eig.begin(), eig.end(), std::greater<double>());
    return eig;
}

DecreasingStep singular_values(const Matrix& a, TraceMode mode) {
    require(a.dim() >= 1, "singular_values: empty matrix");
    std::vector<double> sv;
    if (a.is_hermitian(1e-12)) {
        sv = hermitian_eigenvalues(a);
        for (double& v : sv) v = std::abs(v);
    } else {
        const Matrix gram = a.adjoint() * a;
        sv = hermitian_eigenvalues(gram);
        for (double& v : sv) v = std::sqrt(std::max(0.0, v));
    }
    const double len = mode == TraceMode::Counting ? 1.0 : 1.0 / a.dim();
    std::vector<Plateau> ps;
    for (double v : sv) ps.push_back({len, v});
    return DecreasingStep::canonical(std::move(ps));
}

DecreasingStep singular_values(const HermitianElement& a) { return singular_values(a.m, a.mode); }

double schatten_norm(const Matrix& a, double p) {
    return step_lp_norm(singular_values(a, TraceMode::Counting), p);
}

}  // namespace rok
