// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rok/step.hpp"

namespace rok {

namespace detail {
class OrliczImpl;
}

// Immutable evaluable Orlicz function (even, convex, M(0)=0).  Copies share
// the implementation; all evaluation paths are read-only, so values can be
// used concurrently.
class OrliczFunction {
public:
    double operator()(double t) const;
    double inverse(double y) const;  // |M(inverse(y)) - y| <= 1e-12 * max(1, y)
    double slope_at_one() const;     // left derivative M'(1-0)
    const std::string& describe() const;
    bool is_normalized(double tol = 1e-10) const;  // M(1) == 1

    // families named as in the JSON interface
    static OrliczFunction power(double p);                      // t^p
    static OrliczFunction mp(double p);                         // t^2 on [0,1], 1 + (2/p)(t^p - 1) beyond
    static OrliczFunction nn(double q, int n);                  // n^{q-1} t^q on [0,1/n], qt - (q-1)/n beyond
    static OrliczFunction mn(double q, int n);                  // nn normalized to 1 at 1
    static OrliczFunction mny(double p, const std::vector<double>& y);
    static OrliczFunction nm(const OrliczFunction& base, double p);  // base on [0,1], p-power continuation
    static OrliczFunction max_p2(double p);                     // max{t^2, t^p}
    static OrliczFunction tabulated(const std::vector<std::pair<double, double>>& points);

    // sum_k w_k * inner(a_k t); building block for derived families
    static OrliczFunction weighted_sum(const OrliczFunction& inner,
                                       std::vector<std::pair<double, double>> weight_scale);
    static OrliczFunction compose_power(const OrliczFunction& inner, double p);  // inner(t^p)

    // sum_i len_i * M_p(t * scale_i) evaluated in overflow-safe form; entries
    // carry (len, log(scale), len*scale^p, len*scale^2)
    struct MpPlateauEntry {
        double len;
        double log_scale;
        double coeff_p;  // len * scale^p
        double coeff_2;  // len * scale^2
    };
    static OrliczFunction mp_plateau_sum(double p, std::vector<MpPlateauEntry> entries);

private:
    explicit OrliczFunction(std::shared_ptr<const detail::OrliczImpl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const detail::OrliczImpl> impl_;
};

// modulars and Luxemburg norms ------------------------------------------------

double luxemburg_modular_seq(const OrliczFunction& m, const std::vector<double>& x, double lambda);
double luxemburg_modular_fn(const OrliczFunction& m, const DecreasingStep& f, double lambda);

// inf{ lambda : sum_k M(|x_k|/lambda) <= 1 }, relative tolerance 1e-12; 0 for x = 0.
double luxemburg_seq_norm(const OrliczFunction& m, const std::vector<double>& x);
double luxemburg_fn_norm(const OrliczFunction& m, const DecreasingStep& f);

// (int_0^1 mu^p)^{1/p} + (int_1^inf mu^2)^{1/2}, exact plateau-wise
double lp_plus_l2_kfunc(const DecreasingStep& f, double p);

// certification on (0,1] grids -------------------------------------------------

std::vector<double> default_cert_grid(std::size_t n = 128, double lo = 1e-6);

// best constant C with M(s1)/s1^p <= C * M(s2)/s2^p over ordered grid pairs
double certify_p_convex(const OrliczFunction& m, double p, const std::vector<double>& grid);
// best constant C with M(s1)/s1^q >= C^{-1} * M(s2)/s2^q over ordered grid pairs
double certify_q_concave(const OrliczFunction& m, double q, const std::vector<double>& grid);

// least C with C^{-1} M1 <= M2 <= C M1 on the grid, or nullopt above 1e6
std::optional<double> equivalent_on_unit(const OrliczFunction& m1, const OrliczFunction& m2,
                                         const std::vector<double>& grid);

// grid sanity for user-supplied functions: M(0)=0, nondecreasing, midpoint convex
bool orlicz_grid_check(const OrliczFunction& m, double tol = 1e-10);

// quasi-concave functions ------------------------------------------------------

namespace detail {
class QuasiConcaveImpl;
}

class QuasiConcaveFn {
public:
    double operator()(double t) const;
    const std::string& describe() const;

    static QuasiConcaveFn power(double theta);  // t^theta on [0,1]
    static QuasiConcaveFn from_grid(const std::vector<std::pair<double, double>>& points);
    // phi_M(t) = N_M(t^{1/(2-p)}) / t^{p/(2-p)}; requires a certified M in O_{p,2}
    static QuasiConcaveFn from_orlicz(const OrliczFunction& m, double p);

    // phi(1)=1, nondecreasing, phi(t)/t nonincreasing, checked on a log grid
    bool grid_check(std::size_t n = 128, double tol = 1e-10) const;

private:
    explicit QuasiConcaveFn(std::shared_ptr<const detail::QuasiConcaveImpl> impl)
        : impl_(std::move(impl)) {}
    std::shared_ptr<const detail::QuasiConcaveImpl> impl_;
};

// phi_M with the certification gate (throws PreconditionError on failure)
QuasiConcaveFn phi_from_M(const OrliczFunction& m, double p);

}  // namespace rok
