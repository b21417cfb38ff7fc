// SPDX-License-Identifier: Apache-2.0
#include "rok/step.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace rok {

namespace {
constexpr double kMergeTol = 1e-12;  // relative plateau-merge tolerance

bool values_merge(double a, double b) {
    const double m = std::max(std::abs(a), std::abs(b));
    return std::abs(a - b) <= kMergeTol * m || m < 1e-300;
}
}  // namespace

DecreasingStep DecreasingStep::canonical(std::vector<Plateau> ps) {
    std::erase_if(ps, [](const Plateau& p) { return p.length <= 0.0; });
    for (const Plateau& p : ps)
        require(p.value >= 0.0 && std::isfinite(p.value) && std::isfinite(p.length),
                "DecreasingStep: values must be finite and nonnegative");
    std::sort(ps.begin(), ps.end(),
              [](const Plateau& a, const Plateau& b) { return a.value > b.value; });
    DecreasingStep out;
    for (const Plateau& p : ps) {
        if (!out.ps_.empty() && values_merge(out.ps_.back().value, p.value))
            out.ps_.back().length += p.length;
        else
            out.ps_.push_back(p);
    }
    return out;
}

double DecreasingStep::total_length() const {
    KahanSum s;
    for (const Plateau& p : ps_) s.add(p.length);
    return s.value();
}

double DecreasingStep::support_length() const {
    KahanSum s;
    for (const Plateau& p : ps_)
        if (p.value > 0.0) s.add(p.length);
    return s.value();
}

double DecreasingStep::value_at(double t) const {
    if (t < 0.0) return max_value();
    double acc = 0.0;
    for (const Plateau& p : ps_) {
        acc += p.length;
        if (t < acc) return p.value;
    }
    return 0.0;
}

double DecreasingStep::integral_to(double t) const {
    if (t <= 0.0) return 0.0;
    KahanSum s;
    double acc = 0.0;
    for (const Plateau& p : ps_) {
        const double take = std::min(p.length, t - acc);
        if (take <= 0.0) break;
        s.add(take * p.value);
        acc += p.length;
        if (t <= acc) break;
    }
    return s.value();
}

DecreasingStep DecreasingStep::scaled_values(double c) const {
    require(c >= 0.0, "scaled_values: factor must be >= 0");
    std::vector<Plateau> ps = ps_;
    for (Plateau& p : ps) p.value *= c;
    return canonical(std::move(ps));
}

DecreasingStep DecreasingStep::scaled_lengths(double u) const {
    require(u > 0.0, "scaled_lengths: factor must be > 0");
    std::vector<Plateau> ps = ps_;
    for (Plateau& p : ps) p.length *= u;
    return canonical(std::move(ps));
}

DecreasingStep DecreasingStep::trimmed() const {
    std::vector<Plateau> ps;
    for (const Plateau& p : ps_)
        if (p.value > 0.0) ps.push_back(p);
    return canonical(std::move(ps));
}

std::vector<double> DecreasingStep::breakpoints() const {
    std::vector<double> bs;
    double acc = 0.0;
    for (const Plateau& p : ps_) {
        acc += p.length;
        bs.push_back(acc);
    }
    return bs;
}

bool DecreasingStep::approx_equal(const DecreasingStep& other, double tol) const {
    const DecreasingStep a = trimmed(), b = other.trimmed();
    if (a.ps_.size() != b.ps_.size()) return false;
    for (std::size_t i = 0; i < a.ps_.size(); ++i) {
        if (!approx_eq(a.ps_[i].value, b.ps_[i].value, tol)) return false;
        if (!approx_eq(a.ps_[i].length, b.ps_[i].length, tol)) return false;
    }
    return true;
}

DecreasingStep rearrange_sequence(const std::vector<double>& x) {
    std::vector<Plateau> ps;
    ps.reserve(x.size());
    for (double v : x) ps.push_back({1.0, std::abs(v)});
    return DecreasingStep::canonical(std::move(ps));
}

std::vector<double> rearranged_abs(const std::vector<double>& x) {
    std::vector<double> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = std::abs(x[i]);
    std::sort(out.begin(), out.end(), std::greater<double>());
    return out;
}

DistributionFn DistributionFn::of(const DecreasingStep& f) {
    DistributionFn d;
    double acc = 0.0;
    for (const Plateau& p : f.plateaus()) {
        acc += p.length;
        if (p.value > 0.0) {
            d.levels_.push_back(p.value);
            d.cum_.push_back(acc);
        }
    }
    return d;
}

double DistributionFn::operator()(double s) const {
    // measure{ mu > s }: the cumulative length of plateaus with value > s
    double out = 0.0;
    for (std::size_t j = 0; j < levels_.size(); ++j) {
        if (levels_[j] > s)
            out = cum_[j];
        else
            break;
    }
    return out;
}

DecreasingStep DistributionFn::right_inverse() const {
    std::vector<Plateau> ps;
    double prev = 0.0;
    for (std::size_t j = 0; j < levels_.size(); ++j) {
        ps.push_back({cum_[j] - prev, levels_[j]});
        prev = cum_[j];
    }
    return DecreasingStep::canonical(std::move(ps));
}

bool submajorizes(const DecreasingStep& a, const DecreasingStep& b, double tol) {
    // single sweep over the union of breakpoints; the partial integrals are
    // piecewise linear, so checking at breakpoints is exact
    const std::vector<Plateau>& pa = a.plateaus();
    const std::vector<Plateau>& pb = b.plateaus();
    std::size_t ia = 0, ib = 0;
    double left_a = ia < pa.size() ? pa[ia].length : 0.0;
    double left_b = ib < pb.size() ? pb[ib].length : 0.0;
    KahanSum int_a, int_b;
    while (ia < pa.size() || ib < pb.size()) {
        const double va = ia < pa.size() ? pa[ia].value : 0.0;
        const double vb = ib < pb.size() ? pb[ib].value : 0.0;
        double seg;
        if (ia < pa.size() && (ib >= pb.size() || left_a <= left_b))
            seg = left_a;
        else
            seg = left_b;
        int_a.add(seg * va);
        int_b.add(seg * vb);
        if (int_b.value() > int_a.value() + tol) return false;
        if (ia < pa.size()) {
            left_a -= seg;
            if (left_a <= 0.0) {
                ++ia;
                left_a = ia < pa.size() ? pa[ia].length : 0.0;
            }
        }
        if (ib < pb.size()) {
            left_b -= seg;
            if (left_b <= 0.0) {
                ++ib;
                left_b = ib < pb.size() ? pb[ib].length : 0.0;
            }
        }
    }
    return int_b.value() <= int_a.value() + tol;
}

DecreasingStep dilate_continuous(const DecreasingStep& f, double u) {
    return f.scaled_lengths(u);
}

DecreasingStep direct_sum(const std::vector<DecreasingStep>& fs) {
    std::vector<Plateau> ps;
    for (const DecreasingStep& f : fs)
        ps.insert(ps.end(), f.plateaus().begin(), f.plateaus().end());
    return DecreasingStep::canonical(std::move(ps));
}

DecreasingStep pointwise_sum(const std::vector<DecreasingStep>& fs) {
    // all summands are decreasing and share the origin, so the sum is a
    // decreasing step function with breakpoints in the union
    std::vector<double> bs;
    for (const DecreasingStep& f : fs) {
        const std::vector<double> b = f.breakpoints();
        bs.insert(bs.end(), b.begin(), b.end());
    }
    std::sort(bs.begin(), bs.end());
    bs.erase(std::unique(bs.begin(), bs.end()), bs.end());
    std::vector<Plateau> ps;
    double prev = 0.0;
    for (double t : bs) {
        if (t <= prev) continue;
        const double mid = prev + 0.5 * (t - prev);
        KahanSum v;
        for (const DecreasingStep& f : fs) v.add(f.value_at(mid));
        ps.push_back({t - prev, v.value()});
        prev = t;
    }
    return DecreasingStep::canonical(std::move(ps));
}

std::vector<double> dilate_discrete(const std::vector<double>& x, int n) {
    require(n >= 1, "dilate_discrete: n must be >= 1");
    std::vector<double> out;
    out.reserve(x.size() * static_cast<std::size_t>(n));
    for (double v : x)
        for (int i = 0; i < n; ++i) out.push_back(v);
    return out;
}

std::vector<double> average_discrete(const std::vector<double>& x, int n) {
    require(n >= 1, "average_discrete: n must be >= 1");
    std::vector<double> out;
    const std::size_t blocks = (x.size() + static_cast<std::size_t>(n) - 1) / static_cast<std::size_t>(n);
    out.reserve(blocks);
    for (std::size_t k = 0; k < blocks; ++k) {
        KahanSum s;
        for (std::size_t l = k * n; l < std::min(x.size(), (k + 1) * static_cast<std::size_t>(n)); ++l)
            s.add(x[l]);
        out.push_back(s.value() / n);
    }
    return out;
}

double seq_lp_norm(const std::vector<double>& x, double p) {
    require(p >= 1.0, "seq_lp_norm: p must be >= 1");
    KahanSum s;
    for (double v : x) s.add(std::pow(std::abs(v), p));
    return std::pow(s.value(), 1.0 / p);
}

double step_lp_norm(const DecreasingStep& f, double p) {
    require(p >= 1.0, "step_lp_norm: p must be >= 1");
    KahanSum s;
    for (const Plateau& pl : f.plateaus()) s.add(pl.length * std::pow(pl.value, p));
    return std::pow(s.value(), 1.0 / p);
}

bool sum_dilation_bound(const std::vector<DecreasingStep>& parts, int n, double tol) {
    require(n >= 1, "sum_dilation_bound: n must be >= 1");
    const DecreasingStep total = pointwise_sum(parts);
    const DecreasingStep lhs = DecreasingStep::canonical(total.plateaus());
    const DecreasingStep rhs = dilate_continuous(total, static_cast<double>(n));
    return submajorizes(rhs, lhs, tol);
}

}  // namespace rok
