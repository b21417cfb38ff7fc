// SPDX-License-Identifier: Apache-2.0
#include "rok/orlicz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace rok {

namespace detail {

class OrliczImpl {
public:
    virtual ~OrliczImpl() = default;
    virtual double eval(double t) const = 0;  // t >= 0
    virtual double slope_at_one() const {
        // left derivative by one-sided difference; convex M makes this a
        // lower approximation with O(h) defect
        const double h = 1e-7;
        return (eval(1.0) - eval(1.0 - h)) / h;
    }
    const std::string& describe() const { return name_; }

protected:
    explicit OrliczImpl(std::string name) : name_(std::move(name)) {}

private:
    std::string name_;
};

namespace {

class PowerImpl final : public OrliczImpl {
public:
    explicit PowerImpl(double p) : OrliczImpl("power(p=" + std::to_string(p) + ")"), p_(p) {
        require(p >= 1.0, "power: p must be >= 1");
    }
    double eval(double t) const override { return std::pow(t, p_); }
    double slope_at_one() const override { return p_; }

private:
    double p_;
};

class MpImpl final : public OrliczImpl {
public:
    explicit MpImpl(double p) : OrliczImpl("Mp(p=" + std::to_string(p) + ")"), p_(p) {
        require(p >= 1.0 && p <= 2.0, "Mp: p must lie in [1, 2]");
    }
    double eval(double t) const override {
        if (t <= 1.0) return t * t;
        return 1.0 + (2.0 / p_) * (std::pow(t, p_) - 1.0);
    }
    double slope_at_one() const override { return 2.0; }

private:
    double p_;
};

class NnImpl final : public OrliczImpl {
public:
    NnImpl(double q, int n)
        : OrliczImpl("Nn(q=" + std::to_string(q) + ",n=" + std::to_string(n) + ")"), q_(q), n_(n) {
        require(q >= 1.0 && q <= 2.0, "Nn: q must lie in [1, 2]");
        require(n >= 1, "Nn: n must be >= 1");
    }
    double eval(double t) const override {
        const double inv_n = 1.0 / n_;
        if (t <= inv_n) return std::pow(static_cast<double>(n_), q_ - 1.0) * std::pow(t, q_);
        return q_ * t - (q_ - 1.0) * inv_n;
    }
    double slope_at_one() const override { return q_; }

private:
    double q_;
    int n_;
};

class ScaledImpl final : public OrliczImpl {
public:
    ScaledImpl(std::shared_ptr<const OrliczImpl> inner, double factor, std::string name)
        : OrliczImpl(std::move(name)), inner_(std::move(inner)), factor_(factor) {}
    double eval(double t) const override { return factor_ * inner_->eval(t); }
    double slope_at_one() const override { return factor_ * inner_->slope_at_one(); }

private:
    std::shared_ptr<const OrliczImpl> inner_;
    double factor_;
};

class MaxP2Impl final : public OrliczImpl {
public:
    explicit MaxP2Impl(double p) : OrliczImpl("MaxP2(p=" + std::to_string(p) + ")"), p_(p) {
        require(p >= 1.0 && p <= 2.0, "MaxP2: p must lie in [1, 2]");
    }
    double eval(double t) const override { return std::max(t * t, std::pow(t, p_)); }
    double slope_at_one() const override { return p_; }

private:
    double p_;
};

class WeightedSumImpl final : public OrliczImpl {
public:
    WeightedSumImpl(std::shared_ptr<const OrliczImpl> inner,
                    std::vector<std::pair<double, double>> ws, std::string name)
        : OrliczImpl(std::move(name)), inner_(std::move(inner)), ws_(std::move(ws)) {}
    double eval(double t) const override {
        KahanSum s;
        for (const auto& [w, a] : ws_) s.add(w * inner_->eval(a * t));
        return s.value();
    }

private:
    std::shared_ptr<const OrliczImpl> inner_;
    std::vector<std::pair<double, double>> ws_;
};

class ComposePowerImpl final : public OrliczImpl {
public:
    ComposePowerImpl(std::shared_ptr<const OrliczImpl> inner, double p, std::string name)
        : OrliczImpl(std::move(name)), inner_(std::move(inner)), p_(p) {}
    double eval(double t) const override { return inner_->eval(std::pow(t, p_)); }

private:
    std::shared_ptr<const OrliczImpl> inner_;
    double p_;
};

class NmImpl final : public OrliczImpl {
public:
    NmImpl(std::shared_ptr<const OrliczImpl> base, double p, double slope, std::string name)
        : OrliczImpl(std::move(name)), base_(std::move(base)), p_(p), slope_(slope) {}
    double eval(double t) const override {
        if (t <= 1.0) return base_->eval(t);
        return 1.0 + (slope_ / p_) * (std::pow(t, p_) - 1.0);
    }
    double slope_at_one() const override { return slope_; }

private:
    std::shared_ptr<const OrliczImpl> base_;
    double p_;
    double slope_;
};

class TabulatedImpl final : public OrliczImpl {
public:
    explicit TabulatedImpl(std::vector<std::pair<double, double>> pts)
        : OrliczImpl("tabulated(" + std::to_string(pts.size()) + " pts)") {
        require(pts.size() >= 2, "tabulated: need at least 2 points");
        std::sort(pts.begin(), pts.end());
        for (const auto& [t, m] : pts)
            require(t > 0.0 && m > 0.0, "tabulated: points must be strictly positive");
        for (std::size_t i = 0; i + 1 < pts.size(); ++i)
            require(pts[i + 1].first > pts[i].first && pts[i + 1].second >= pts[i].second,
                    "tabulated: points must be increasing");
        for (const auto& [t, m] : pts) {
            lt_.push_back(std::log(t));
            lm_.push_back(std::log(m));
        }
    }
    // piecewise linear in log-log coordinates, end slopes extended
    double eval(double t) const override {
        if (t <= 0.0) return 0.0;
        const double lt = std::log(t);
        std::size_t hi = 1;
        while (hi + 1 < lt_.size() && lt_[hi] < lt) ++hi;
        const std::size_t lo = hi - 1;
        const double slope = (lm_[hi] - lm_[lo]) / (lt_[hi] - lt_[lo]);
        return std::exp(lm_[lo] + slope * (lt - lt_[lo]));
    }

private:
    std::vector<double> lt_, lm_;
};

class MpPlateauSumImpl final : public OrliczImpl {
public:
    MpPlateauSumImpl(double p, std::vector<OrliczFunction::MpPlateauEntry> es)
        : OrliczImpl("mp_plateau_sum(p=" + std::to_string(p) + "," + std::to_string(es.size()) +
                     " plateaus)"),
          p_(p),
          es_(std::move(es)) {
        require(p >= 1.0 && p <= 2.0, "mp_plateau_sum: p must lie in [1, 2]");
    }
    double eval(double t) const override {
        if (t <= 0.0) return 0.0;
        const double lt = std::log(t);
        KahanSum s;
        for (const auto& e : es_) {
            if (lt + e.log_scale <= 0.0)
                s.add(e.coeff_2 * t * t);
            else
                s.add(e.len * (1.0 - 2.0 / p_) + (2.0 / p_) * e.coeff_p * std::pow(t, p_));
        }
        return s.value();
    }

private:
    double p_;
    std::vector<OrliczFunction::MpPlateauEntry> es_;
};

}  // namespace
}  // namespace detail

using detail::OrliczImpl;

double OrliczFunction::operator()(double t) const { return impl_->eval(std::abs(t)); }

double OrliczFunction::slope_at_one() const { return impl_->slope_at_one(); }

const std::string& OrliczFunction::describe() const { return impl_->describe(); }

bool OrliczFunction::is_normalized(double tol) const { return std::abs((*this)(1.0) - 1.0) <= tol; }

double OrliczFunction::inverse(double y) const {
    require(y >= 0.0, "inverse: y must be >= 0");
    if (y == 0.0) return 0.0;
    double hi = 1.0;
    while (impl_->eval(hi) < y && hi < 1e300) hi *= 2.0;
    double lo = 0.0;
    const double tol = 1e-12 * std::max(1.0, y);
    double mid = 0.5 * hi;
    for (int it = 0; it < 300; ++it) {
        mid = 0.5 * (lo + hi);
        const double v = impl_->eval(mid);
        if (std::abs(v - y) <= tol) break;
        if (v < y)
            lo = mid;
        else
            hi = mid;
    }
    return mid;
}

OrliczFunction OrliczFunction::power(double p) {
    return OrliczFunction(std::make_shared<detail::PowerImpl>(p));
}

OrliczFunction OrliczFunction::mp(double p) {
    return OrliczFunction(std::make_shared<detail::MpImpl>(p));
}

OrliczFunction OrliczFunction::nn(double q, int n) {
    return OrliczFunction(std::make_shared<detail::NnImpl>(q, n));
}

OrliczFunction OrliczFunction::mn(double q, int n) {
    auto raw = std::make_shared<detail::NnImpl>(q, n);
    const double norm = raw->eval(1.0);
    return OrliczFunction(std::make_shared<detail::ScaledImpl>(
        raw, 1.0 / norm, "Mn(q=" + std::to_string(q) + ",n=" + std::to_string(n) + ")"));
}

OrliczFunction OrliczFunction::weighted_sum(const OrliczFunction& inner,
                                            std::vector<std::pair<double, double>> weight_scale) {
    return OrliczFunction(std::make_shared<detail::WeightedSumImpl>(
        inner.impl_, std::move(weight_scale), "weighted_sum[" + inner.describe() + "]"));
}

OrliczFunction OrliczFunction::compose_power(const OrliczFunction& inner, double p) {
    require(p > 0.0, "compose_power: p must be > 0");
    return OrliczFunction(std::make_shared<detail::ComposePowerImpl>(
        inner.impl_, p, inner.describe() + "∘t^" + std::to_string(p)));
}

OrliczFunction OrliczFunction::mny(double p, const std::vector<double>& y) {
    require(p >= 1.0 && p <= 2.0, "Mny: p must lie in [1, 2]");
    const int n = static_cast<int>(y.size());
    require(n >= 1, "Mny: y must be nonempty");
    std::vector<double> yp(y.size());
    bool any = false;
    for (std::size_t k = 0; k < y.size(); ++k) {
        yp[k] = std::pow(std::abs(y[k]), p);
        any = any || yp[k] > 0.0;
    }
    require(any, "Mny: y must be nonzero");
    const double q = 2.0 / p;
    const OrliczFunction inner = mn(q, n);
    const double norm = luxemburg_seq_norm(inner, yp);
    std::vector<std::pair<double, double>> ws;
    for (double v : yp)
        if (v > 0.0) ws.emplace_back(1.0, v / norm);
    const OrliczFunction nny = weighted_sum(inner, std::move(ws));
    return compose_power(nny, p);
}

OrliczFunction OrliczFunction::nm(const OrliczFunction& base, double p) {
    require(p >= 1.0 && p <= 2.0, "NM: p must lie in [1, 2]");
    return OrliczFunction(std::make_shared<detail::NmImpl>(
        base.impl_, p, base.slope_at_one(), "NM[" + base.describe() + ",p=" + std::to_string(p) + "]"));
}

OrliczFunction OrliczFunction::max_p2(double p) {
    return OrliczFunction(std::make_shared<detail::MaxP2Impl>(p));
}

OrliczFunction OrliczFunction::tabulated(const std::vector<std::pair<double, double>>& points) {
    return OrliczFunction(std::make_shared<detail::TabulatedImpl>(points));
}

OrliczFunction OrliczFunction::mp_plateau_sum(double p, std::vector<MpPlateauEntry> entries) {
    return OrliczFunction(std::make_shared<detail::MpPlateauSumImpl>(p, std::move(entries)));
}

// --- modulars and norms ------------------------------------------------------

double luxemburg_modular_seq(const OrliczFunction& m, const std::vector<double>& x, double lambda) {
    KahanSum s;
    for (double v : x)
        if (v != 0.0) s.add(m(std::abs(v) / lambda));
    return s.value();
}

double luxemburg_modular_fn(const OrliczFunction& m, const DecreasingStep& f, double lambda) {
    KahanSum s;
    for (const Plateau& p : f.plateaus())
        if (p.value > 0.0) s.add(p.length * m(p.value / lambda));
    return s.value();
}

namespace {

template <typename Modular>
double luxemburg_bisect(Modular&& modular, double sup_norm) {
    if (sup_norm <= 0.0) return 0.0;
    // bracket: modular(lo) > 1 >= modular(hi); the modular is strictly
    // decreasing in lambda wherever it is nonzero
    double lo = sup_norm, hi = sup_norm;
    if (modular(sup_norm) > 1.0) {
        while (modular(hi) > 1.0) {
            hi *= 2.0;
            require(hi < 1e290, "luxemburg norm: failed to bracket from above");
        }
        lo = hi * 0.5;
    } else {
        while (lo > 1e-290 && modular(lo * 0.5) <= 1.0) lo *= 0.5;
        hi = lo;
        lo *= 0.5;
    }
    for (int it = 0; it < 120 && (hi - lo) > 1e-13 * hi; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (modular(mid) > 1.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

double luxemburg_seq_norm(const OrliczFunction& m, const std::vector<double>& x) {
    double sup = 0.0;
    for (double v : x) sup = std::max(sup, std::abs(v));
    return luxemburg_bisect([&](double l) { return luxemburg_modular_seq(m, x, l); }, sup);
}

double luxemburg_fn_norm(const OrliczFunction& m, const DecreasingStep& f) {
    return luxemburg_bisect([&](double l) { return luxemburg_modular_fn(m, f, l); }, f.max_value());
}

double lp_plus_l2_kfunc(const DecreasingStep& f, double p) {
    require(p >= 1.0 && p <= 2.0, "lp_plus_l2_kfunc: p must lie in [1, 2]");
    KahanSum head, tail;
    double acc = 0.0;
    for (const Plateau& pl : f.plateaus()) {
        const double lo = acc, hi = acc + pl.length;
        acc = hi;
        const double head_len = std::max(0.0, std::min(hi, 1.0) - lo);
        const double tail_len = hi - lo - head_len;
        if (head_len > 0.0) head.add(head_len * std::pow(pl.value, p));
        if (tail_len > 0.0) tail.add(tail_len * pl.value * pl.value);
    }
    return std::pow(head.value(), 1.0 / p) + std::sqrt(tail.value());
}

// --- certification -------------------------------------------------------------

std::vector<double> default_cert_grid(std::size_t n, double lo) { return log_grid(lo, 1.0, n); }

namespace {
void check_grid(const std::vector<double>& grid) {
    require(grid.size() >= 8, "certification grid too small (need >= 8 points)");
    for (double s : grid) require(s > 0.0 && s <= 1.0, "certification grid must lie in (0,1]");
}
}  // namespace

double certify_p_convex(const OrliczFunction& m, double p, const std::vector<double>& grid) {
    check_grid(grid);
    std::vector<double> g = grid;
    std::sort(g.begin(), g.end());
    double best = 1.0, running_max = 0.0;
    for (double s : g) {
        const double v = m(s) / std::pow(s, p);
        running_max = std::max(running_max, v);
        if (v > 0.0) best = std::max(best, running_max / v);
    }
    return best;
}

double certify_q_concave(const OrliczFunction& m, double q, const std::vector<double>& grid) {
    check_grid(grid);
    std::vector<double> g = grid;
    std::sort(g.begin(), g.end());
    double best = 1.0;
    double running_min = std::numeric_limits<double>::infinity();
    for (double s : g) {
        const double v = m(s) / std::pow(s, q);
        running_min = std::min(running_min, v);
        if (running_min > 0.0) best = std::max(best, v / running_min);
    }
    return best;
}

std::optional<double> equivalent_on_unit(const OrliczFunction& m1, const OrliczFunction& m2,
                                         const std::vector<double>& grid) {
    check_grid(grid);
    double c = 1.0;
    for (double s : grid) {
        const double a = m1(s), b = m2(s);
        if (a <= 0.0 || b <= 0.0) return std::nullopt;
        c = std::max({c, a / b, b / a});
        if (c >= 1e6) return std::nullopt;
    }
    return c;
}

bool orlicz_grid_check(const OrliczFunction& m, double tol) {
    if (m(1e-12) > 1e-6) return false;  // M(0) = 0
    const std::vector<double> g = log_grid(1e-6, 4.0, 96);
    double prev = 0.0;
    for (double t : g) {
        const double v = m(t);
        if (v < prev - tol * std::max(1.0, prev)) return false;  // nondecreasing
        prev = v;
    }
    for (std::size_t i = 0; i + 2 < g.size(); ++i) {
        const double a = g[i], b = g[i + 2];
        const double mid = 0.5 * (a + b);
        const double lhs = m(mid), rhs = 0.5 * (m(a) + m(b));
        if (lhs > rhs + tol * std::max(1.0, rhs)) return false;  // midpoint convexity
    }
    return true;
}

// --- quasi-concave functions ----------------------------------------------------

namespace detail {

class QuasiConcaveImpl {
public:
    virtual ~QuasiConcaveImpl() = default;
    virtual double eval(double t) const = 0;
    const std::string& describe() const { return name_; }

protected:
    explicit QuasiConcaveImpl(std::string name) : name_(std::move(name)) {}

private:
    std::string name_;
};

namespace {

class PhiPowerImpl final : public QuasiConcaveImpl {
public:
    explicit PhiPowerImpl(double theta)
        : QuasiConcaveImpl("phi_power(theta=" + std::to_string(theta) + ")"), theta_(theta) {
        require(theta > 0.0 && theta <= 1.0, "phi power: theta must lie in (0,1]");
    }
    double eval(double t) const override { return t <= 0.0 ? 0.0 : std::pow(t, theta_); }

private:
    double theta_;
};

class PhiGridImpl final : public QuasiConcaveImpl {
public:
    explicit PhiGridImpl(std::vector<std::pair<double, double>> pts)
        : QuasiConcaveImpl("phi_grid(" + std::to_string(pts.size()) + " pts)") {
        require(pts.size() >= 2, "phi grid: need at least 2 points");
        std::sort(pts.begin(), pts.end());
        for (const auto& [t, v] : pts)
            require(t > 0.0 && t <= 1.0 && v > 0.0, "phi grid: points must lie in (0,1] x (0,inf)");
        pts_ = std::move(pts);
    }
    // monotone linear interpolation; below the first node interpolate
    // linearly to (0,0) which preserves both monotonicity constraints
    double eval(double t) const override {
        if (t <= 0.0) return 0.0;
        if (t <= pts_.front().first) return pts_.front().second * t / pts_.front().first;
        if (t >= pts_.back().first) return pts_.back().second;
        std::size_t hi = 1;
        while (hi + 1 < pts_.size() && pts_[hi].first < t) ++hi;
        const auto& [t0, v0] = pts_[hi - 1];
        const auto& [t1, v1] = pts_[hi];
        return v0 + (v1 - v0) * (t - t0) / (t1 - t0);
    }

private:
    std::vector<std::pair<double, double>> pts_;
};

class PhiFromOrliczImpl final : public QuasiConcaveImpl {
public:
    PhiFromOrliczImpl(OrliczFunction nm, double p)
        : QuasiConcaveImpl("phi_M[" + nm.describe() + "]"), nm_(std::move(nm)), p_(p) {
        require(p >= 1.0 && p < 2.0, "phi_M: p must lie in [1, 2)");
    }
    double eval(double t) const override {
        if (t <= 0.0) return 0.0;
        const double e = 1.0 / (2.0 - p_);
        return nm_(std::pow(t, e)) / std::pow(t, p_ * e);
    }

private:
    OrliczFunction nm_;
    double p_;
};

}  // namespace
}  // namespace detail

double QuasiConcaveFn::operator()(double t) const { return impl_->eval(t); }

const std::string& QuasiConcaveFn::describe() const { return impl_->describe(); }

QuasiConcaveFn QuasiConcaveFn::power(double theta) {
    return QuasiConcaveFn(std::make_shared<detail::PhiPowerImpl>(theta));
}

QuasiConcaveFn QuasiConcaveFn::from_grid(const std::vector<std::pair<double, double>>& points) {
    return QuasiConcaveFn(std::make_shared<detail::PhiGridImpl>(points));
}

QuasiConcaveFn QuasiConcaveFn::from_orlicz(const OrliczFunction& m, double p) {
    return QuasiConcaveFn(std::make_shared<detail::PhiFromOrliczImpl>(OrliczFunction::nm(m, p), p));
}

bool QuasiConcaveFn::grid_check(std::size_t n, double tol) const {
    const std::vector<double> g = log_grid(1e-8, 1.0, n);
    if (std::abs(impl_->eval(1.0) - 1.0) > tol * 10) return false;
    double prev_v = 0.0;
    double prev_ratio = std::numeric_limits<double>::infinity();
    for (double t : g) {
        const double v = impl_->eval(t);
        if (v < prev_v - tol * std::max(1.0, prev_v)) return false;
        const double r = v / t;
        if (r > prev_ratio * (1.0 + tol)) return false;
        prev_v = v;
        prev_ratio = r;
    }
    return true;
}

QuasiConcaveFn phi_from_M(const OrliczFunction& m, double p) {
    const std::vector<double> grid = default_cert_grid();
    const double cp = certify_p_convex(m, p, grid);
    const double c2 = certify_q_concave(m, 2.0, grid);
    require(cp <= 1.0 + 1e-6 && c2 <= 1.0 + 1e-6,
            "phi_from_M: " + m.describe() + " failed O_{p,2} certification (constants " +
                std::to_string(cp) + ", " + std::to_string(c2) + ")");
    require(m.is_normalized(), "phi_from_M: M(1) must equal 1");
    return QuasiConcaveFn::from_orlicz(m, p);
}

}  // namespace rok
