// SPDX-License-Identifier: Apache-2.0
#include "rok/construct.hpp"

#include <chrono>
#include <cmath>
#include <limits>

#include "rok/rng.hpp"

namespace rok {

namespace {

constexpr double kValueCap = 1e150;  // plateau values above this are truncated

// Root of the nondecreasing g on [lo_limit, hi] with g(root) = target,
// bisected in log t (relative tolerance 1e-13).  Returns NaN when the target
// is not bracketed above lo_limit.
template <typename G>
double log_bisect_increasing(G&& g, double target, double hi, double lo_limit = 1e-300) {
    double lo = hi;
    while (lo > lo_limit && g(lo) > target) lo *= 0.25;
    if (g(lo) > target) return std::numeric_limits<double>::quiet_NaN();
    double wlo = std::log(lo), whi = std::log(hi);
    for (int it = 0; it < 300 && (whi - wlo) > 1e-13; ++it) {
        const double mid = 0.5 * (wlo + whi);
        if (g(std::exp(mid)) >= target)
            whi = mid;
        else
            wlo = mid;
    }
    return std::exp(0.5 * (wlo + whi));
}

}  // namespace

BkBuild bk_build(const QuasiConcaveFn& phi, double d, int depth) {
    require(d > 1.0, "bk_build: d must be > 1");
    require(depth >= 1, "bk_build: depth must be >= 1");
    require(phi.grid_check(), "bk_build: phi fails the quasi-concavity grid check");

    BkSequences seq;
    seq.d = d;

    // t_k: phi(t_k) = 2^{-k}; the sequence may stop early if the next root is
    // not representable
    seq.t.push_back(1.0);
    for (int k = 1; k <= depth; ++k) {
        const double target = std::ldexp(1.0, -k);
        const double root = log_bisect_increasing([&](double t) { return phi(t); }, target,
                                                  seq.t.back());
        if (std::isnan(root)) {
            require(k > 1, "bk_build: root-finding for t_k failed to bracket (phi(0) > 0?)");
            break;
        }
        seq.t.push_back(root);
    }

    // s_k: s/phi(s) = 2^{-k}; stops when phi'(0) is finite (Step-5 branch)
    seq.s.push_back(1.0);
    for (int k = 1; k <= depth; ++k) {
        const double target = std::ldexp(1.0, -k);
        const double root = log_bisect_increasing([&](double t) { return t / phi(t); }, target,
                                                  seq.s.back());
        if (std::isnan(root)) {
            seq.finite_branch = true;
            break;
        }
        seq.s.push_back(root);
    }

    // u recursion; ties between float-equal roots are broken with a relative
    // margin so the walk is deterministic
    std::vector<int> u_even_t_index;  // phi(u_{2k}) = 2^{-index}
    seq.u.push_back(1.0);
    u_even_t_index.push_back(0);
    if (seq.s.size() >= 2) {
        seq.u.push_back(seq.s[1]);
        bool expect_even = true;  // next to append is u_{2k}
        while (static_cast<int>(seq.u.size()) < 2 * depth) {
            const double prev = seq.u.back();
            if (expect_even) {
                std::size_t l = 0;
                while (l < seq.t.size() && seq.t[l] >= prev * (1.0 - 1e-12)) ++l;
                if (l == seq.t.size()) break;
                seq.u.push_back(seq.t[l]);
                u_even_t_index.push_back(static_cast<int>(l));
            } else {
                std::size_t l = 0;
                while (l < seq.s.size() && seq.s[l] > prev * (1.0 + 1e-12)) ++l;
                if (l == seq.s.size()) break;
                seq.u.push_back(seq.s[l]);
            }
            expect_even = !expect_even;
        }
    }

    for (std::size_t i = 0; i < seq.u.size(); i += 2) {
        seq.u_even.push_back(seq.u[i]);
        seq.phi_u_even.push_back(std::ldexp(1.0, -u_even_t_index[i / 2]));
    }

    // x = (+)_k u_{2k}^{-1/(d-1)} * chi of length (1/2) u_{2k}^{1/(d-1)} phi(u_{2k})
    std::vector<Plateau> ps;
    std::vector<double> kept_u, kept_phi;
    KahanSum tail;
    for (std::size_t k = 0; k < seq.u_even.size(); ++k) {
        const double u = seq.u_even[k];
        const double phiu = seq.phi_u_even[k];
        const double lv = -std::log(u) / (d - 1.0);  // log of the plateau value
        const double len = 0.5 * std::exp(-lv) * phiu;
        if (lv > std::log(kValueCap) || len < 1e-300) {
            tail.add(phiu);
            continue;
        }
        ps.push_back({len, std::exp(lv)});
        kept_u.push_back(u);
        kept_phi.push_back(phiu);
    }
    seq.truncation_tail = tail.value();
    seq.u_even = std::move(kept_u);
    seq.phi_u_even = std::move(kept_phi);

    seq.v.assign(seq.u_even.size() + 1, 0.0);
    for (std::size_t k = seq.u_even.size(); k-- > 0;)
        seq.v[k] = seq.v[k + 1] +
                   0.5 * std::exp(std::log(seq.u_even[k]) / (d - 1.0)) * seq.phi_u_even[k];

    BkBuild out;
    out.seq = std::move(seq);
    out.x = DecreasingStep::canonical(std::move(ps));
    return out;
}

double bk_g(const DecreasingStep& x, double d, double t) {
    if (t <= 0.0) return 0.0;
    KahanSum s;
    for (const Plateau& p : x.plateaus()) {
        if (p.value <= 0.0) continue;
        // min{v, t v^d} = v * min(1, t/u) with u = v^{1-d}
        const double u = std::exp((1.0 - d) * std::log(p.value));
        s.add(p.length * p.value * std::min(1.0, t / u));
    }
    return s.value();
}

VerificationReport bk_verify(const QuasiConcaveFn& phi, const DecreasingStep& x, double d,
                             const std::vector<double>& t_grid) {
    const auto t0 = std::chrono::steady_clock::now();
    VerificationReport rep;
    rep.check = "bk_band";
    rep.params = "phi=" + phi.describe() + ",d=" + std::to_string(d) +
                 ",grid=" + std::to_string(t_grid.size());
    rep.band_low = 0.25;
    rep.band_high = 2.5;
    double rmin = std::numeric_limits<double>::infinity(), rmax = 0.0;
    bool ok = true;
    for (double t : t_grid) {
        require(t > 0.0, "bk_verify: grid points must be positive");
        const double ratio = bk_g(x, d, t) / phi(t);
        rmin = std::min(rmin, ratio);
        rmax = std::max(rmax, ratio);
        const double lo = t <= 1.0 ? 0.25 : 1.0 / 12.0;  // extended band past t = 1
        ok = ok && ratio >= lo - VerificationReport::kBandSlack &&
             ratio <= 2.5 + VerificationReport::kBandSlack;
    }
    rep.ratio_min = rmin;
    rep.ratio_max = rmax;
    rep.pass = ok;
    rep.inputs_digest = digest(rep.params);
    rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

namespace {

// decay of M(t)/t^p toward 0, sampled on a log grid
bool vanishing_ratio(const OrliczFunction& m, double p) {
    const double hi = m(1e-2) / std::pow(1e-2, p);
    const double lo = m(1e-8) / std::pow(1e-8, p);
    return lo <= 1e-2 * hi;
}

}  // namespace

XmChain xm_chain(const OrliczFunction& m, double p, int depth, int trials, std::uint64_t seed) {
    require(p >= 1.0 && p < 2.0, "xm_chain: p must lie in [1, 2)");
    const QuasiConcaveFn phi = phi_from_M(m, p);  // also certifies membership
    if (!vanishing_ratio(m, p))
        throw PreconditionError("xm_chain: M(t)/t^p does not vanish on the grid — l_p-like core; chain void");

    BkBuild bk = bk_build(phi, 2.0 / p, depth);
    const OrliczFunction n_m = OrliczFunction::nm(m, p);

    // M'(t) = int_0^1 M_p(t x_M^{1/p}(s)) ds with scale_k = u_k^{-1/(2-p)};
    // coefficients come straight from (u, phi(u)) so nothing overflows
    std::vector<OrliczFunction::MpPlateauEntry> entries;
    for (std::size_t k = 0; k < bk.seq.u_even.size(); ++k) {
        const double u = bk.seq.u_even[k];
        const double phiu = bk.seq.phi_u_even[k];
        OrliczFunction::MpPlateauEntry e;
        e.log_scale = -std::log(u) / (2.0 - p);
        e.len = 0.5 * std::exp((p / (2.0 - p)) * std::log(u)) * phiu;
        e.coeff_p = 0.5 * phiu;
        e.coeff_2 = 0.5 * phiu / u;
        entries.push_back(e);
    }
    OrliczFunction m_prime = OrliczFunction::mp_plateau_sum(p, std::move(entries));

    VerificationReport rep;
    rep.check = "xm_chain_band";
    rep.params = "M=" + m.describe() + ",p=" + std::to_string(p) + ",depth=" + std::to_string(depth);
    rep.band_low = 1.0 / 12.0;
    rep.band_high = 5.0;
    rep.seed = seed;
    double rmin = std::numeric_limits<double>::infinity(), rmax = 0.0;
    double norm_dev = 0.0;
    bool ok = true;
    for (int trial = 0; trial < trials; ++trial) {
        CounterRng rng = CounterRng::keyed(seed, static_cast<std::uint64_t>(trial));
        const int len = 1 + static_cast<int>(rng.next_below(24));
        std::vector<double> x;
        for (int i = 0; i < len; ++i) x.push_back(rng.next_unit() < 0.25 ? 0.0 : rng.mixed_scale());
        if (rearranged_abs(x).front() == 0.0) continue;
        const double nm_norm = luxemburg_seq_norm(n_m, x);
        const double m_norm = luxemburg_seq_norm(m, x);
        const double mp_norm = luxemburg_seq_norm(m_prime, x);
        norm_dev = std::max(norm_dev, std::abs(nm_norm - m_norm) / m_norm);
        const double ratio = mp_norm / nm_norm;
        rmin = std::min(rmin, ratio);
        rmax = std::max(rmax, ratio);
        ok = ok && rep.within_band(ratio);
    }
    rep.ratio_min = rmin;
    rep.ratio_max = rmax;
    rep.max_deviation = norm_dev;  // | ||x||_{N_M} - ||x||_M | / ||x||_M
    rep.pass = ok && norm_dev <= 1e-9;
    rep.inputs_digest = digest(rep.params);
    rep.note = bk.seq.finite_branch ? "finite-derivative branch" : "infinite-derivative branch";

    return XmChain{n_m, phi, std::move(bk), std::move(m_prime), std::move(rep)};
}

OrliczFunction orlicz_from_a0(const DecreasingStep& a0, double p) {
    require(std::abs(a0.total_length() - 1.0) <= 1e-9, "orlicz_from_a0: A0 must have total length 1");
    require(p >= 1.0 && p <= 2.0, "orlicz_from_a0: p must lie in [1, 2]");
    std::vector<OrliczFunction::MpPlateauEntry> entries;
    for (const Plateau& pl : a0.plateaus()) {
        if (pl.value <= 0.0) continue;
        OrliczFunction::MpPlateauEntry e;
        e.len = pl.length;
        e.log_scale = std::log(pl.value);
        e.coeff_p = pl.length * std::pow(pl.value, p);
        e.coeff_2 = pl.length * pl.value * pl.value;
        entries.push_back(e);
    }
    require(!entries.empty(), "orlicz_from_a0: A0 vanishes");
    return OrliczFunction::mp_plateau_sum(p, std::move(entries));
}

MsIdentityPair ms_identity_pair(const DecreasingStep& a0, double p, const std::vector<double>& a) {
    std::vector<DecreasingStep> copies;
    for (double aj : a)
        if (aj != 0.0) copies.push_back(a0.scaled_values(std::abs(aj)));
    const DecreasingStep tensor = direct_sum(copies);
    MsIdentityPair out;
    out.tensor_side = luxemburg_fn_norm(OrliczFunction::mp(p), tensor);
    out.orlicz_side = luxemburg_seq_norm(orlicz_from_a0(a0, p), a);
    return out;
}

OrliczFunction rs_orlicz_at_point(const std::vector<DecreasingStep>& fs, double p, double s) {
    require(!fs.empty(), "rs_orlicz_at_point: need at least one image");
    std::vector<double> y;
    for (const DecreasingStep& f : fs) y.push_back(f.value_at(s));
    bool any = false;
    for (double v : y) any = any || v != 0.0;
    require(any, "rs_orlicz_at_point: all images vanish at s");
    return OrliczFunction::mny(p, y);
}

}  // namespace rok
