// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "rok/step.hpp"

namespace rok {

struct Atom {
    double value;
    double mass;  // > 0
};

// Finitely supported real law; atoms sorted by value ascending, values
// deduplicated within 1e-12, total mass <= 1 + 1e-12 (mass short of 1 is an
// implicit atom at 0 unless stated otherwise by the caller).
class DiscreteDistribution {
public:
    DiscreteDistribution() = default;
    static DiscreteDistribution from_atoms(std::vector<Atom> atoms);
    static DiscreteDistribution delta(double value) { return from_atoms({{value, 1.0}}); }

    const std::vector<Atom>& atoms() const { return atoms_; }
    bool empty() const { return atoms_.empty(); }

    double total_mass() const;
    double mean() const;
    double second_moment() const;
    std::complex<double> charfn(double t) const;  // sum_j m_j e^{i t v_j}

    double mass_at(double value, double tol = 1e-9) const;
    bool is_symmetric(double tol = 1e-12) const;
    bool is_nonnegative() const { return atoms_.empty() || atoms_.front().value >= -1e-12; }

    // decreasing rearrangement of |value| weighted by masses
    DecreasingStep to_step() const;

    // P(X <= s)
    double cdf(double s) const;
    double sample(double u) const;  // inverse-cdf draw from u in [0,1)

private:
    std::vector<Atom> atoms_;
};

// exact convolution by atom-pair merging; throws AtomExplosionError past the cap
DiscreteDistribution convolve(const DiscreteDistribution& a, const DiscreteDistribution& b,
                              std::size_t atom_cap = 1000000);
DiscreteDistribution convolve_power(const DiscreteDistribution& law, int n,
                                    std::size_t atom_cap = 1000000);

// scale every atom value by c
DiscreteDistribution scale_values(const DiscreteDistribution& law, double c);

// sup_s |F_a(s) - F_b(s)| over the union of atom positions
double ks_distance(const DiscreteDistribution& a, const DiscreteDistribution& b);

}  // namespace rok
