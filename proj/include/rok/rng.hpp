// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <cstdint>

namespace rok {

// Counter-based splittable generator: each (seed, index) pair yields an
// independent stream, so Monte Carlo reductions are identical for any
// execution order or worker count.
class CounterRng {
public:
    static CounterRng keyed(std::uint64_t seed, std::uint64_t index) {
        CounterRng r;
        r.state_ = mix(seed + 0x9e3779b97f4a7c15ULL * (index + 1));
        return r;
    }

    std::uint64_t next_u64() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix(state_);
    }

    // uniform in [0, 1)
    double next_unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    double uniform(double a, double b) { return a + (b - a) * next_unit(); }

    // integer in [0, n)
    std::uint64_t next_below(std::uint64_t n) { return next_u64() % n; }

    // exp(U[-6, 2]) mixed-scale positive magnitudes used by the harness
    double mixed_scale() { return std::exp(uniform(-6.0, 2.0)); }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    std::uint64_t state_ = 0;
};

// Poisson(1) by cdf inversion; exact and deterministic.
inline int poisson1_draw(CounterRng& rng) {
    const double u = rng.next_unit();
    double p = std::exp(-1.0);  // P(N = 0)
    double cdf = p;
    int n = 0;
    while (u >= cdf && n < 200) {
        ++n;
        p /= static_cast<double>(n);
        cdf += p;
    }
    return n;
}

}  // namespace rok
