// SPDX-License-Identifier: Apache-2.0
#include "rok/distribution.hpp"

#include <algorithm>
#include <cmath>

namespace rok {

namespace {
bool values_close(double a, double b) {
    return std::abs(a - b) <= 1e-12 * std::max(1.0, std::max(std::abs(a), std::abs(b)));
}
}  // namespace

DiscreteDistribution DiscreteDistribution::from_atoms(std::vector<Atom> atoms) {
    std::erase_if(atoms, [](const Atom& a) { return a.mass <= 0.0; });
    for (const Atom& a : atoms)
        require(std::isfinite(a.value) && std::isfinite(a.mass), "distribution: atoms must be finite");
    std::sort(atoms.begin(), atoms.end(), [](const Atom& a, const Atom& b) { return a.value < b.value; });
    DiscreteDistribution d;
    for (const Atom& a : atoms) {
        if (!d.atoms_.empty() && values_close(d.atoms_.back().value, a.value))
            d.atoms_.back().mass += a.mass;
        else
            d.atoms_.push_back(a);
    }
    require(d.total_mass() <= 1.0 + 1e-12, "distribution: total mass exceeds 1");
    return d;
}

double DiscreteDistribution::total_mass() const {
    KahanSum s;
    for (const Atom& a : atoms_) s.add(a.mass);
    return s.value();
}

double DiscreteDistribution::mean() const {
    KahanSum s;
    for (const Atom& a : atoms_) s.add(a.mass * a.value);
    return s.value();
}

double DiscreteDistribution::second_moment() const {
    KahanSum s;
    for (const Atom& a : atoms_) s.add(a.mass * a.value * a.value);
    return s.value();
}

std::complex<double> DiscreteDistribution::charfn(double t) const {
    std::complex<double> out(0.0, 0.0);
    for (const Atom& a : atoms_) out += a.mass * std::exp(std::complex<double>(0.0, t * a.value));
    return out;
}

double DiscreteDistribution::mass_at(double value, double tol) const {
    double m = 0.0;
    for (const Atom& a : atoms_)
        if (std::abs(a.value - value) <= tol) m += a.mass;
    return m;
}

bool DiscreteDistribution::is_symmetric(double tol) const {
    for (const Atom& a : atoms_) {
        double opp = 0.0;
        for (const Atom& b : atoms_)
            if (values_close(b.value, -a.value)) opp += b.mass;
        if (std::abs(opp - a.mass) > tol * std::max(1.0, a.mass)) return false;
    }
    return true;
}

DecreasingStep DiscreteDistribution::to_step() const {
    std::vector<Plateau> ps;
    for (const Atom& a : atoms_) ps.push_back({a.mass, std::abs(a.value)});
    return DecreasingStep::canonical(std::move(ps));
}

double DiscreteDistribution::cdf(double s) const {
    KahanSum acc;
    for (const Atom& a : atoms_) {
        if (a.value > s) break;
        acc.add(a.mass);
    }
    return acc.value();
}

double DiscreteDistribution::sample(double u) const {
    require(!atoms_.empty(), "sample: empty distribution");
    double acc = 0.0;
    for (const Atom& a : atoms_) {
        acc += a.mass;
        if (u < acc) return a.value;
    }
    return atoms_.back().value;
}

DiscreteDistribution convolve(const DiscreteDistribution& a, const DiscreteDistribution& b,
                              std::size_t atom_cap) {
    if (a.atoms().size() * b.atoms().size() > atom_cap)
        throw AtomExplosionError(
            "convolution would exceed the atom cap; coarsen the input laws or lower K_max");
    std::vector<Atom> out;
    out.reserve(a.atoms().size() * b.atoms().size());
    for (const Atom& x : a.atoms())
        for (const Atom& y : b.atoms()) out.push_back({x.value + y.value, x.mass * y.mass});
    DiscreteDistribution d = DiscreteDistribution::from_atoms(std::move(out));
    if (d.atoms().size() > atom_cap)
        throw AtomExplosionError("convolution exceeded the atom cap after merging");
    return d;
}

DiscreteDistribution convolve_power(const DiscreteDistribution& law, int n, std::size_t atom_cap) {
    require(n >= 0, "convolve_power: n must be >= 0");
    DiscreteDistribution out = DiscreteDistribution::delta(0.0);
    for (int i = 0; i < n; ++i) out = convolve(out, law, atom_cap);
    return out;
}

DiscreteDistribution scale_values(const DiscreteDistribution& law, double c) {
    std::vector<Atom> atoms = law.atoms();
    for (Atom& a : atoms) a.value *= c;
    return DiscreteDistribution::from_atoms(std::move(atoms));
}

double ks_distance(const DiscreteDistribution& a, const DiscreteDistribution& b) {
    std::vector<double> pts;
    for (const Atom& x : a.atoms()) pts.push_back(x.value);
    for (const Atom& x : b.atoms()) pts.push_back(x.value);
    std::sort(pts.begin(), pts.end());
    double d = 0.0;
    for (double s : pts) d = std::max(d, std::abs(a.cdf(s) - b.cdf(s)));
    return d;
}

}  // namespace rok
