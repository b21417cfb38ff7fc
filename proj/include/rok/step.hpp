// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "rok/numeric.hpp"

namespace rok {

struct Plateau {
    double length;  // measure of the level set, > 0
    double value;   // nonnegative
};

// Canonical decreasing rearrangement: finitely many plateaus with strictly
// decreasing values (adjacent values within 1e-12 relative are merged).
// An absent tail means value 0; at most one explicit zero plateau (kept so a
// finite sequence remembers its length) and it is always last.
class DecreasingStep {
public:
    DecreasingStep() = default;

    // Canonicalizes: sorts by value descending, merges near-equal values,
    // drops zero-length plateaus. Values must be >= 0.
    static DecreasingStep canonical(std::vector<Plateau> ps);

    const std::vector<Plateau>& plateaus() const { return ps_; }
    bool empty() const { return ps_.empty(); }
    std::size_t size() const { return ps_.size(); }

    double total_length() const;
    double support_length() const;  // length where value > 0
    double max_value() const { return ps_.empty() ? 0.0 : ps_.front().value; }

    // mu(t): value of the plateau containing t (right-continuous), 0 past the end.
    double value_at(double t) const;

    // int_0^t mu(s) ds, exact piecewise-linear evaluation.
    double integral_to(double t) const;

    // int over the full support of f(value) weighted by lengths
    double total_integral() const { return integral_to(total_length()); }

    DecreasingStep scaled_values(double c) const;    // c >= 0
    DecreasingStep scaled_lengths(double u) const;   // D_u, u > 0
    DecreasingStep trimmed() const;                  // drop the explicit zero plateau

    std::vector<double> breakpoints() const;  // cumulative lengths

    bool approx_equal(const DecreasingStep& other, double tol) const;

private:
    std::vector<Plateau> ps_;
};

// --- construction from raw data ------------------------------------------

// Decreasing rearrangement of |x|; keeps an explicit zero plateau when the
// input contains zeros.
DecreasingStep rearrange_sequence(const std::vector<double>& x);

// mu as a plain sorted vector (|x| descending).
std::vector<double> rearranged_abs(const std::vector<double>& x);

// --- distribution function -------------------------------------------------

// d(s) = measure{ mu > s }, right-continuous and nonincreasing.  Only the
// part above level 0 is visible to d, so an explicit zero plateau is not
// recoverable from it.
class DistributionFn {
public:
    static DistributionFn of(const DecreasingStep& f);
    double operator()(double s) const;  // d(s), s >= 0
    DecreasingStep right_inverse() const;

    // descending positive level thresholds and the measure strictly above each
    const std::vector<double>& levels() const { return levels_; }
    const std::vector<double>& masses() const { return cum_; }

private:
    std::vector<double> levels_;  // v_0 > v_1 > ... > 0
    std::vector<double> cum_;     // cum_[j] = measure{ mu >= v_j } = d(s) for s in [v_{j+1}, v_j)
};

// --- calculus ---------------------------------------------------------------

// true iff int_0^t mu(b) <= int_0^t mu(a) + tol at every breakpoint of either
// argument (exact in between by piecewise linearity): b is submajorized by a.
bool submajorizes(const DecreasingStep& a, const DecreasingStep& b, double tol);

// D_u on step functions: lengths scaled by u, values unchanged.
DecreasingStep dilate_continuous(const DecreasingStep& f, double u);

// canonical rearrangement of the disjoint union
DecreasingStep direct_sum(const std::vector<DecreasingStep>& fs);

// pointwise sum of decreasing step functions aligned at 0 (still decreasing)
DecreasingStep pointwise_sum(const std::vector<DecreasingStep>& fs);

// D_n / D_{1/n} on sequences
std::vector<double> dilate_discrete(const std::vector<double>& x, int n);
std::vector<double> average_discrete(const std::vector<double>& x, int n);

double seq_lp_norm(const std::vector<double>& x, double p);
double step_lp_norm(const DecreasingStep& f, double p);

// mu(sum_i mu(A_i)) submajorized by D_n sum_i mu(A_i), checked exactly.
bool sum_dilation_bound(const std::vector<DecreasingStep>& parts, int n, double tol);

}  // namespace rok
