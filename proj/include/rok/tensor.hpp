// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "rok/kruglov.hpp"
#include "rok/matrix.hpp"
#include "rok/report.hpp"

namespace rok {

// Dense element of the k-fold tensor power of a d x d matrix algebra.
// Sizes are capped at d^k <= 81; larger transforms must take the spectral path.
struct TensorElement {
    int leg_dim = 0;  // d
    int order = 0;    // k
    Matrix m;         // d^k x d^k

    static constexpr int kSizeCap = 81;
};

TensorElement tensor_product(const std::vector<Matrix>& legs);

// y_k(x) = sum_{m=1..k} 1^{(m-1)} (x) x (x) 1^{(k-m)}
TensorElement nc_kruglov_tensor(const Matrix& x, int k);

// conditional expectation onto the symmetric subalgebra: average of leg
// permutations; valid for arbitrary tensor elements by linear extension
TensorElement sym_expectation(const TensorElement& u);

// E_k(u_1 (x) ... (x) u_k)
TensorElement symmetrize(const std::vector<Matrix>& legs);

// alpha_{n,k}(x) = C(n,k) E_n(x^{(k)} (x) (1-e)^{(n-k)}), x in eNe
TensorElement alpha_nk(const Matrix& x, const Matrix& e, int n, int k);

// pi_{n,k}(z) = C(n,k) E_n(z (x) (1-e)^{(n-k)}) for a k-leg tensor z over eNe;
// restricted to symmetric z this is multiplicative (a *-homomorphism)
TensorElement pi_nk(const TensorElement& z, const Matrix& e, int n);

// sum_k k C(n,k) E_n(x (x) e^{(k-1)} (x) (1-e)^{(n-k)}) == y_n(x)
VerificationReport check_strange_equality(int n, const Matrix& x, const Matrix& e,
                                          double tol = 1e-10);

// alpha_{n,k}(x) alpha_{n,k}(y) == alpha_{n,k}(xy) for x, y in eNe
VerificationReport check_alpha_multiplicative(int n, int k, const Matrix& x, const Matrix& y,
                                              const Matrix& e, double tol = 1e-10);

// [Kx, Ky] == K[x,y] verified per tensor block up to order k_max
VerificationReport check_commutator_identity(const Matrix& x, const Matrix& y, int k_max,
                                             double tol = 1e-10);

// exp(tau(exp(i sum_k l_k x_k) - 1)) == prod_k exp(tau(exp(i l_k x_k) - 1))
// for pairwise disjointly supported Hermitian pieces, over a lambda grid
VerificationReport check_independence_charfn(const std::vector<Matrix>& pieces,
                                             const std::vector<double>& lambda_grid,
                                             double tol = 1e-10);

// normalized trace of exp(iH) through the spectrum
std::complex<double> normalized_trace_exp_i(const Matrix& h);

double binomial(int n, int k);

}  // namespace rok
