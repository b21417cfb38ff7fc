// SPDX-License-Identifier: Apache-2.0
#include "rok/kruglov.hpp"

#include <chrono>
#include <cmath>

#include "rok/rng.hpp"

namespace rok {

namespace {

// weights 1/(e n!) for n = 0..k_max and the uncovered tail, the latter summed
// forward so it keeps full precision instead of cancelling against 1
std::pair<std::vector<double>, double> poisson_weights(int k_max) {
    std::vector<double> w(static_cast<std::size_t>(k_max) + 1);
    w[0] = std::exp(-1.0);
    for (int n = 1; n <= k_max; ++n) w[static_cast<std::size_t>(n)] = w[static_cast<std::size_t>(n - 1)] / n;
    KahanSum tail;
    double term = w[static_cast<std::size_t>(k_max)];
    for (int n = k_max + 1; n <= k_max + 60; ++n) {
        term /= n;
        tail.add(term);
    }
    return {w, tail.value()};
}

}  // namespace

KruglovResult kruglov_exact(const DiscreteDistribution& law, int k_max, std::size_t atom_cap) {
    require(k_max >= 1, "kruglov_exact: K_max must be >= 1");
    require(std::abs(law.total_mass() - 1.0) <= 1e-9, "kruglov_exact: law must be a probability distribution");
    const auto [w, tail] = poisson_weights(k_max);
    std::vector<Atom> mix;
    DiscreteDistribution power = DiscreteDistribution::delta(0.0);
    for (int n = 0; n <= k_max; ++n) {
        if (n > 0) power = convolve(power, law, atom_cap);
        for (const Atom& a : power.atoms()) mix.push_back({a.value, w[static_cast<std::size_t>(n)] * a.mass});
        if (mix.size() > atom_cap)
            throw AtomExplosionError("kruglov_exact exceeded the atom cap; coarsen the law or lower K_max");
    }
    return {DiscreteDistribution::from_atoms(std::move(mix)), tail};
}

std::complex<double> kruglov_charfn(const DiscreteDistribution& law, double t) {
    std::complex<double> expo(0.0, 0.0);
    for (const Atom& a : law.atoms())
        expo += a.mass * (std::exp(std::complex<double>(0.0, t * a.value)) - 1.0);
    return std::exp(expo);
}

DiscreteDistribution kruglov_mc(const DiscreteDistribution& law, std::uint64_t seed,
                                std::int64_t trials) {
    require(trials >= 1, "kruglov_mc: trials must be >= 1");
    require(!law.empty(), "kruglov_mc: empty law");
    std::vector<Atom> samples;
    samples.reserve(static_cast<std::size_t>(trials));
    const double unit = 1.0 / static_cast<double>(trials);
    for (std::int64_t i = 0; i < trials; ++i) {
        CounterRng rng = CounterRng::keyed(seed, static_cast<std::uint64_t>(i));
        const int n = poisson1_draw(rng);
        KahanSum sum;
        for (int j = 0; j < n; ++j) sum.add(law.sample(rng.next_unit()));
        samples.push_back({sum.value(), unit});
    }
    return DiscreteDistribution::from_atoms(std::move(samples));
}

VerificationReport maj_bound_check(const DiscreteDistribution& law, int k_max, int n_terms,
                                   double tol) {
    const auto t0 = std::chrono::steady_clock::now();
    const KruglovResult kr = kruglov_exact(law, k_max);
    const DecreasingStep lhs = kr.mixture.to_step();

    const DecreasingStep mu_x = law.to_step();
    std::vector<DecreasingStep> parts;
    double w = std::exp(-1.0);
    for (int n = 1; n <= n_terms; ++n) {
        w /= n;
        parts.push_back(dilate_continuous(mu_x, w).scaled_values(static_cast<double>(n)));
    }
    const DecreasingStep rhs = pointwise_sum(parts);

    VerificationReport rep;
    rep.check = "maj_bound";
    rep.params = "k_max=" + std::to_string(k_max) + ",n_terms=" + std::to_string(n_terms);
    rep.band_low = 0.0;
    rep.band_high = tol;
    rep.pass = submajorizes(rhs, lhs, tol);
    rep.inputs_digest = digest(rep.params);
    rep.note = "lhs truncated at K_max (tail " + std::to_string(kr.tail_mass) + ")";
    rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

DiscreteDistribution TruncatedFockSum::flatten() const {
    std::vector<Atom> mix;
    for (std::size_t k = 0; k < blocks.size(); ++k)
        for (const Atom& a : blocks[k].atoms()) mix.push_back({a.value, weights[k] * a.mass});
    return DiscreteDistribution::from_atoms(std::move(mix));
}

double TruncatedFockSum::trace() const { return flatten().mean(); }

double TruncatedFockSum::second_moment() const { return flatten().second_moment(); }

DiscreteDistribution eigenvalue_law(const HermitianElement& x) {
    require(x.m.is_hermitian(1e-12), "eigenvalue_law: matrix must be Hermitian");
    const std::vector<double> eig = hermitian_eigenvalues(x.m);
    const double w = x.trace_weight();
    std::vector<Atom> atoms;
    for (double v : eig) atoms.push_back({v, w});
    return DiscreteDistribution::from_atoms(std::move(atoms));
}

TruncatedFockSum nc_kruglov_spectral(const HermitianElement& x, int k_max) {
    require(x.mode == TraceMode::Normalized, "nc_kruglov_spectral: trace must be normalized (tau(1)=1)");
    require(k_max >= 1, "nc_kruglov_spectral: K_max must be >= 1");
    const DiscreteDistribution law = eigenvalue_law(x);
    const auto [w, tail] = poisson_weights(k_max);

    TruncatedFockSum out;
    out.weights = w;
    out.tail_mass = tail;
    DiscreteDistribution power = DiscreteDistribution::delta(0.0);
    out.blocks.push_back(power);  // block 0 is the zero atom
    for (int k = 1; k <= k_max; ++k) {
        power = convolve(power, law);
        out.blocks.push_back(power);
    }
    return out;
}

}  // namespace rok
