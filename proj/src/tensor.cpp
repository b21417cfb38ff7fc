// SPDX-License-Identifier: Apache-2.0
#include "rok/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace rok {

namespace {

int ipow(int base, int exp) {
    int out = 1;
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
}

void check_cap(int d, int k) {
    require(k >= 1 && k <= 4, "tensor order must lie in 1..4");
    require(d >= 1, "leg dimension must be >= 1");
    require(ipow(d, k) <= TensorElement::kSizeCap,
            "tensor size cap exceeded (d^k > 81); use the spectral path");
}

// digits of a multi-index in base d, most significant leg first
void unpack(int idx, int d, int k, int* out) {
    for (int leg = k - 1; leg >= 0; --leg) {
        out[leg] = idx % d;
        idx /= d;
    }
}

int pack(const int* digits, int d, int k) {
    int idx = 0;
    for (int leg = 0; leg < k; ++leg) idx = idx * d + digits[leg];
    return idx;
}

}  // namespace

double binomial(int n, int k) {
    if (k < 0 || k > n) return 0.0;
    double out = 1.0;
    for (int i = 1; i <= k; ++i) out = out * (n - k + i) / i;
    return out;
}

TensorElement tensor_product(const std::vector<Matrix>& legs) {
    require(!legs.empty(), "tensor_product: need at least one leg");
    const int d = legs.front().dim();
    const int k = static_cast<int>(legs.size());
    for (const Matrix& m : legs) require(m.dim() == d, "tensor_product: mixed leg dimensions");
    check_cap(d, k);
    Matrix out = legs.front();
    for (int i = 1; i < k; ++i) out = kron(out, legs[static_cast<std::size_t>(i)]);
    return {d, k, std::move(out)};
}

TensorElement nc_kruglov_tensor(const Matrix& x, int k) {
    const int d = x.dim();
    check_cap(d, k);
    const Matrix id = Matrix::identity(d);
    Matrix acc(ipow(d, k));
    for (int m = 1; m <= k; ++m) {
        std::vector<Matrix> legs(static_cast<std::size_t>(k), id);
        legs[static_cast<std::size_t>(m - 1)] = x;
        acc += tensor_product(legs).m;
    }
    return {d, k, std::move(acc)};
}

TensorElement sym_expectation(const TensorElement& u) {
    const int d = u.leg_dim, k = u.order;
    check_cap(d, k);
    const int n = ipow(d, k);
    std::vector<int> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 0);
    Matrix acc(n);
    int count = 0;
    int di[4], dj[4], pi[4], pj[4];
    do {
        ++count;
        for (int i = 0; i < n; ++i) {
            unpack(i, d, k, di);
            for (int leg = 0; leg < k; ++leg) pi[perm[static_cast<std::size_t>(leg)]] = di[leg];
            const int ri = pack(pi, d, k);
            for (int j = 0; j < n; ++j) {
                unpack(j, d, k, dj);
                for (int leg = 0; leg < k; ++leg) pj[perm[static_cast<std::size_t>(leg)]] = dj[leg];
                acc.at(i, j) += u.m.at(ri, pack(pj, d, k));
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    acc *= cplx(1.0 / count, 0.0);
    return {d, k, std::move(acc)};
}

TensorElement symmetrize(const std::vector<Matrix>& legs) {
    return sym_expectation(tensor_product(legs));
}

TensorElement alpha_nk(const Matrix& x, const Matrix& e, int n, int k) {
    require(0 <= k && k <= n, "alpha_nk: need 0 <= k <= n");
    const int d = x.dim();
    check_cap(d, n);
    const Matrix q = Matrix::identity(d) - e;
    std::vector<Matrix> legs;
    for (int i = 0; i < k; ++i) legs.push_back(x);
    for (int i = k; i < n; ++i) legs.push_back(q);
    TensorElement out = symmetrize(legs);
    out.m *= cplx(binomial(n, k), 0.0);
    return out;
}

TensorElement pi_nk(const TensorElement& z, const Matrix& e, int n) {
    const int d = z.leg_dim, k = z.order;
    require(k <= n, "pi_nk: need k <= n");
    require(e.dim() == d, "pi_nk: projection dimension mismatch");
    check_cap(d, n);
    Matrix padded = z.m;
    const Matrix q = Matrix::identity(d) - e;
    for (int i = k; i < n; ++i) padded = kron(padded, q);
    TensorElement out = sym_expectation({d, n, std::move(padded)});
    out.m *= cplx(binomial(n, k), 0.0);
    return out;
}

VerificationReport check_strange_equality(int n, const Matrix& x, const Matrix& e, double tol) {
    const int d = x.dim();
    check_cap(d, n);
    const Matrix q = Matrix::identity(d) - e;
    Matrix lhs(ipow(d, n));
    for (int k = 1; k <= n; ++k) {
        std::vector<Matrix> legs;
        legs.push_back(x);
        for (int i = 0; i < k - 1; ++i) legs.push_back(e);
        for (int i = k; i < n; ++i) legs.push_back(q);
        TensorElement term = symmetrize(legs);
        term.m *= cplx(k * binomial(n, k), 0.0);
        lhs += term.m;
    }
    const Matrix rhs = nc_kruglov_tensor(x, n).m;

    VerificationReport rep;
    rep.check = "strange_equality";
    rep.params = "n=" + std::to_string(n) + ",d=" + std::to_string(d);
    rep.max_deviation = max_abs_diff(lhs, rhs);
    rep.band_high = tol;
    rep.pass = rep.max_deviation <= tol;
    rep.inputs_digest = digest(rep.params);
    return rep;
}

VerificationReport check_alpha_multiplicative(int n, int k, const Matrix& x, const Matrix& y,
                                              const Matrix& e, double tol) {
    // contract: arguments must already be compressed by e
    const Matrix cx = e * x * e, cy = e * y * e;
    VerificationReport rep;
    rep.check = "alpha_multiplicative";
    rep.params = "n=" + std::to_string(n) + ",k=" + std::to_string(k);
    if (max_abs_diff(cx, x) > 1e-12 || max_abs_diff(cy, y) > 1e-12) {
        rep.pass = false;
        rep.note = "precondition violation: arguments not compressed by e";
        return rep;
    }
    const Matrix lhs = alpha_nk(x, e, n, k).m * alpha_nk(y, e, n, k).m;
    const Matrix rhs = alpha_nk(x * y, e, n, k).m;
    rep.max_deviation = max_abs_diff(lhs, rhs);
    rep.band_high = tol;
    rep.pass = rep.max_deviation <= tol;
    rep.inputs_digest = digest(rep.params);
    return rep;
}

VerificationReport check_commutator_identity(const Matrix& x, const Matrix& y, int k_max,
                                             double tol) {
    VerificationReport rep;
    rep.check = "commutator_identity";
    rep.params = "k_max=" + std::to_string(k_max) + ",d=" + std::to_string(x.dim());
    const Matrix xy = commutator(x, y);
    double dev = 0.0;
    for (int k = 1; k <= k_max; ++k) {
        const Matrix lhs = commutator(nc_kruglov_tensor(x, k).m, nc_kruglov_tensor(y, k).m);
        const Matrix rhs = nc_kruglov_tensor(xy, k).m;
        dev = std::max(dev, max_abs_diff(lhs, rhs));
    }
    rep.max_deviation = dev;
    rep.band_high = tol;
    rep.pass = dev <= tol;
    rep.inputs_digest = digest(rep.params);
    return rep;
}

std::complex<double> normalized_trace_exp_i(const Matrix& h) {
    const std::vector<double> eig = hermitian_eigenvalues(h);
    std::complex<double> acc(0.0, 0.0);
    for (double v : eig) acc += std::exp(std::complex<double>(0.0, v));
    return acc / static_cast<double>(h.dim());
}

VerificationReport check_independence_charfn(const std::vector<Matrix>& pieces,
                                             const std::vector<double>& lambda_grid,
                                             double tol) {
    VerificationReport rep;
    rep.check = "independence_charfn";
    rep.params = "pieces=" + std::to_string(pieces.size()) +
                 ",grid=" + std::to_string(lambda_grid.size());
    require(!pieces.empty(), "independence check: need at least one piece");
    const int d = pieces.front().dim();
    for (std::size_t a = 0; a < pieces.size(); ++a)
        for (std::size_t b = a + 1; b < pieces.size(); ++b)
            if ((pieces[a] * pieces[b]).max_abs() > 1e-12) {
                rep.pass = false;
                rep.note = "precondition violation: supports overlap";
                return rep;
            }

    // every lambda assignment on the grid, one lambda per piece, walked as an
    // odometer; for a single piece this degenerates to the identity check
    const std::size_t m = pieces.size();
    std::vector<std::size_t> idx(m, 0);
    double dev = 0.0;
    while (true) {
        Matrix h(d);
        std::complex<double> rhs_exp(0.0, 0.0);
        for (std::size_t j = 0; j < m; ++j) {
            const double l = lambda_grid[idx[j]];
            Matrix term = pieces[j];
            term *= cplx(l, 0.0);
            h += term;
            rhs_exp += normalized_trace_exp_i(term) - 1.0;
        }
        const std::complex<double> lhs = std::exp(normalized_trace_exp_i(h) - 1.0);
        const std::complex<double> rhs = std::exp(rhs_exp);
        dev = std::max(dev, std::abs(lhs - rhs));

        std::size_t pos = 0;
        while (pos < m && ++idx[pos] == lambda_grid.size()) {
            idx[pos] = 0;
            ++pos;
        }
        if (pos == m) break;
    }
    rep.max_deviation = dev;
    rep.band_high = tol;
    rep.pass = dev <= tol;
    rep.inputs_digest = digest(rep.params);
    return rep;
}

}  // namespace rok
