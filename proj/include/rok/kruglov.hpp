// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "rok/distribution.hpp"
#include "rok/matrix.hpp"
#include "rok/report.hpp"

namespace rok {

// Exact Kruglov transform truncated at K_max convolution powers:
// mixture sum_{n=0..K_max} (1/(e n!)) law^{*n}; the weight not covered by the
// truncation is carried separately.
struct KruglovResult {
    DiscreteDistribution mixture;
    double tail_mass = 0.0;
};

KruglovResult kruglov_exact(const DiscreteDistribution& law, int k_max,
                            std::size_t atom_cap = 1000000);

// closed-form characteristic function exp(sum_j m_j (e^{i t v_j} - 1))
std::complex<double> kruglov_charfn(const DiscreteDistribution& law, double t);

// sampling realization: N ~ Poisson(1), sum of N independent draws;
// deterministic for fixed (seed, trials)
DiscreteDistribution kruglov_mc(const DiscreteDistribution& law, std::uint64_t seed,
                                std::int64_t trials);

// mu(Kx) submajorized by sum_{n<=n_terms} n D_{1/(e n!)} mu(x), checked exactly
VerificationReport maj_bound_check(const DiscreteDistribution& law, int k_max, int n_terms = 40,
                                   double tol = 1e-12);

// Truncated symmetric-Fock realization of the noncommutative transform: block
// k holds the spectrum of y_k(x) with weight e^{-tau(1)} tau(1)^k / k!; block 0
// is the zero atom.
struct TruncatedFockSum {
    std::vector<DiscreteDistribution> blocks;  // blocks[k] = spectrum of y_k(x)
    std::vector<double> weights;               // e^{-1}/k!
    double tail_mass = 0.0;

    DiscreteDistribution flatten() const;  // weighted mixture over blocks
    double trace() const;                  // sigma of the truncated element
    double second_moment() const;
};

// Requires a normalized trace (tau(1) = 1).  Block k spectrum is the k-fold
// convolution of the eigenvalue law of x: the commuting summands
// 1^{(m-1)} (x) x (x) 1^{(k-m)} have joint spectrum given by independent
// eigenvalue draws.
TruncatedFockSum nc_kruglov_spectral(const HermitianElement& x, int k_max);

// eigenvalue law of a Hermitian element under its trace weight
DiscreteDistribution eigenvalue_law(const HermitianElement& x);

}  // namespace rok
