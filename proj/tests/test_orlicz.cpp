// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rok/orlicz.hpp"
#include "rok/rng.hpp"
#include "rok/verify.hpp"

using namespace rok;

TEST_CASE("family evaluation and inversion") {
    const OrliczFunction p2 = OrliczFunction::power(2.0);
    CHECK(p2(3.0) == 9.0);
    CHECK(p2.inverse(9.0) == doctest::Approx(3.0).epsilon(1e-12));
    CHECK_THROWS_AS(p2.inverse(-1.0), PreconditionError);

    const OrliczFunction m1 = OrliczFunction::mp(1.0);
    CHECK(m1(1.0) == 1.0);
    CHECK(m1(2.0) == doctest::Approx(3.0));
    CHECK(m1(0.5) == 0.25);

    const OrliczFunction n4 = OrliczFunction::nn(2.0, 4);
    CHECK(n4(0.25) == doctest::Approx(0.25));
    CHECK(n4(1.0) == doctest::Approx(1.75));
    CHECK(OrliczFunction::mn(2.0, 4).is_normalized());
}

TEST_CASE("built-in families satisfy the function invariants") {
    const std::vector<OrliczFunction> fams = {
        OrliczFunction::power(1.0),
        OrliczFunction::power(2.0),
        OrliczFunction::mp(1.0),
        OrliczFunction::mp(1.5),
        OrliczFunction::mp(2.0),
        OrliczFunction::nn(1.5, 4),
        OrliczFunction::mn(2.0, 8),
        OrliczFunction::mny(1.5, {1.0, 2.0, 0.5}),
        OrliczFunction::nm(OrliczFunction::mp(1.5), 1.2),
        OrliczFunction::max_p2(1.3),
    };
    for (const OrliczFunction& m : fams) CHECK_MESSAGE(orlicz_grid_check(m), m.describe());
}

TEST_CASE("inverse postcondition across families") {
    CounterRng rng = CounterRng::keyed(40, 0);
    const std::vector<OrliczFunction> fams = {
        OrliczFunction::power(1.7), OrliczFunction::mp(1.3), OrliczFunction::nn(1.5, 5),
        OrliczFunction::mn(2.0, 3), OrliczFunction::max_p2(1.5)};
    for (const OrliczFunction& m : fams) {
        for (int trial = 0; trial < 20; ++trial) {
            const double y = rng.mixed_scale();
            CHECK(std::abs(m(m.inverse(y)) - y) <= 1e-12 * std::max(1.0, y));
        }
        CHECK(m.inverse(0.0) == 0.0);
    }
}

TEST_CASE("Luxemburg norm reproduces l_p for power functions") {
    CounterRng rng = CounterRng::keyed(41, 0);
    for (double p : {1.0, 1.5, 2.0}) {
        const OrliczFunction m = OrliczFunction::power(p);
        for (int trial = 0; trial < 20; ++trial) {
            const std::vector<double> x = random_mixed_vector(rng, 10);
            CHECK(luxemburg_seq_norm(m, x) == doctest::Approx(seq_lp_norm(x, p)).epsilon(1e-11));
        }
    }
    CHECK(luxemburg_seq_norm(OrliczFunction::power(1.5), {}) == 0.0);
    CHECK(luxemburg_seq_norm(OrliczFunction::power(1.5), {0.0, 0.0}) == 0.0);
}

TEST_CASE("norm of a block of unit coordinates is 1/M^{-1}(1/m)") {
    for (const OrliczFunction& m :
         {OrliczFunction::mp(1.3), OrliczFunction::mn(2.0, 4), OrliczFunction::max_p2(1.5)}) {
        for (int blocks : {1, 3, 7}) {
            const std::vector<double> x(static_cast<std::size_t>(blocks), 1.0);
            CHECK(luxemburg_seq_norm(m, x) ==
                  doctest::Approx(1.0 / m.inverse(1.0 / blocks)).epsilon(1e-10));
        }
    }
    CHECK(luxemburg_seq_norm(OrliczFunction::mp(1.7), {1.0}) == doctest::Approx(1.0));
}

TEST_CASE("returned norm brackets the modular infimum") {
    CounterRng rng = CounterRng::keyed(42, 0);
    for (const OrliczFunction& m :
         {OrliczFunction::mn(1.7, 4), OrliczFunction::mp(1.2), OrliczFunction::max_p2(1.8)}) {
        for (int trial = 0; trial < 12; ++trial) {
            const std::vector<double> x = random_mixed_vector(rng, 6);
            const double norm = luxemburg_seq_norm(m, x);
            if (norm == 0.0) continue;
            CHECK(luxemburg_modular_seq(m, x, norm * (1.0 + 1e-6)) <= 1.0 + 1e-12);
            CHECK(luxemburg_modular_seq(m, x, norm * (1.0 - 1e-6)) >= 1.0 - 1e-12);
        }
    }
}

TEST_CASE("the norm is rearrangement invariant") {
    CounterRng rng = CounterRng::keyed(44, 0);
    const OrliczFunction m = OrliczFunction::mp(1.6);
    for (int trial = 0; trial < 15; ++trial) {
        std::vector<double> x = random_mixed_vector(rng, 9);
        std::vector<double> y = x;
        for (double& v : y)
            if (rng.next_unit() < 0.5) v = -v;
        for (std::size_t i = y.size(); i > 1; --i) std::swap(y[i - 1], y[rng.next_below(i)]);
        const double nx = luxemburg_seq_norm(m, x);
        CHECK(luxemburg_seq_norm(m, y) == doctest::Approx(nx).epsilon(1e-12));
        // the sequence norm equals the function norm of the unit-length step
        CHECK(luxemburg_fn_norm(m, rearrange_sequence(x)) == doctest::Approx(nx).epsilon(1e-11));
    }
}

TEST_CASE("modular at the returned norm is 1") {
    CounterRng rng = CounterRng::keyed(43, 0);
    const OrliczFunction m = OrliczFunction::mp(1.4);
    for (int trial = 0; trial < 20; ++trial) {
        const std::vector<double> x = random_mixed_vector(rng, 8);
        const double norm = luxemburg_seq_norm(m, x);
        if (norm == 0.0) continue;
        CHECK(luxemburg_modular_seq(m, x, norm) == doctest::Approx(1.0).epsilon(1e-10));
    }
}

TEST_CASE("norm properties: homogeneity, triangle, pointwise monotonicity") {
    CounterRng rng = CounterRng::keyed(47, 0);
    const OrliczFunction m = OrliczFunction::mn(1.5, 3);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<double> x = random_mixed_vector(rng, 8);
        std::vector<double> y = random_mixed_vector(rng, 8);
        x.resize(8, 0.0);
        y.resize(8, 0.0);
        const double c = 0.1 + 3.0 * rng.next_unit();
        std::vector<double> cx = x, xy(8);
        for (double& v : cx) v *= c;
        for (int i = 0; i < 8; ++i) xy[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i)] + y[static_cast<std::size_t>(i)];
        const double nx = luxemburg_seq_norm(m, x), ny = luxemburg_seq_norm(m, y);
        CHECK(luxemburg_seq_norm(m, cx) == doctest::Approx(c * nx).epsilon(1e-10));
        CHECK(luxemburg_seq_norm(m, xy) <= nx + ny + 1e-10 * (nx + ny));
        // mu(x') <= mu(y') pointwise forces norm(x') <= norm(y')
        std::vector<double> shrunk = y;
        for (double& v : shrunk) v *= rng.next_unit();
        CHECK(luxemburg_seq_norm(m, shrunk) <= ny * (1.0 + 1e-10));
    }
}

TEST_CASE("norm is monotone under submajorization for 2-concave families") {
    CounterRng rng = CounterRng::keyed(53, 0);
    for (const OrliczFunction& m : {OrliczFunction::mp(1.2), OrliczFunction::mn(2.0, 3)}) {
        for (int trial = 0; trial < 25; ++trial) {
            std::vector<double> b = random_mixed_vector(rng, 9);
            // block averaging contracts in the submajorization order
            const int blocks = 1 + static_cast<int>(rng.next_below(3));
            const std::vector<double> a = dilate_discrete(average_discrete(b, blocks), blocks);
            REQUIRE(submajorizes(rearrange_sequence(b), rearrange_sequence(a), 1e-10));
            CHECK(luxemburg_seq_norm(m, a) <= luxemburg_seq_norm(m, b) * (1.0 + 1e-9));
        }
    }
}

TEST_CASE("pointwise domination of functions reverses into norms") {
    // M1 <= M2 pointwise gives ||x||_{M1} <= ||x||_{M2}
    CounterRng rng = CounterRng::keyed(59, 0);
    for (double p : {1.0, 1.5, 1.9}) {
        const OrliczFunction lo = OrliczFunction::power(p);
        const OrliczFunction hi = OrliczFunction::max_p2(p);
        for (int trial = 0; trial < 15; ++trial) {
            const std::vector<double> x = random_mixed_vector(rng, 8);
            CHECK(luxemburg_seq_norm(lo, x) <= luxemburg_seq_norm(hi, x) * (1.0 + 1e-10));
        }
    }
}

TEST_CASE("function-norm basics and the K-functional comparison") {
    const OrliczFunction m1 = OrliczFunction::mp(1.0);
    const DecreasingStep chi = DecreasingStep::canonical({{1.0, 1.0}});
    CHECK(luxemburg_fn_norm(m1, chi) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(lp_plus_l2_kfunc(chi, 1.0) == doctest::Approx(1.0));
    CHECK(lp_plus_l2_kfunc(DecreasingStep::canonical({{2.0, 1.0}}), 1.0) == doctest::Approx(2.0));

    CounterRng rng = CounterRng::keyed(61, 0);
    for (double p : {1.0, 1.5, 2.0}) {
        const OrliczFunction mp = OrliczFunction::mp(p);
        for (int trial = 0; trial < 25; ++trial) {
            const DecreasingStep f = random_step(rng, 6, 0.5 + 4.0 * rng.next_unit());
            const double lux = luxemburg_fn_norm(mp, f);
            const double kf = lp_plus_l2_kfunc(f, p);
            const double c = 0.2 + 2.0 * rng.next_unit();
            CHECK(luxemburg_fn_norm(mp, f.scaled_values(c)) == doctest::Approx(c * lux).epsilon(1e-10));
            const double ratio = kf / lux;
            CHECK(ratio >= 0.5 - 1e-9);
            CHECK(ratio <= 2.0 * std::pow(2.0 / p, 1.0 / p) + 1e-9);
        }
    }
}

TEST_CASE("function norm is the L2 norm when mu stays under the quadratic knee") {
    CounterRng rng = CounterRng::keyed(62, 0);
    for (double p : {1.0, 1.4, 1.9}) {
        const OrliczFunction mp = OrliczFunction::mp(p);
        for (int trial = 0; trial < 15; ++trial) {
            DecreasingStep f = random_step(rng, 5, 1.0 + 2.0 * rng.next_unit());
            f = f.scaled_values(1.0 / f.max_value());  // mu <= 1
            const double l2 = step_lp_norm(f, 2.0);
            if (l2 < f.max_value()) continue;  // the knee would engage
            const double lux = luxemburg_fn_norm(mp, f);
            CHECK(lux == doctest::Approx(l2).epsilon(1e-10));
            const double ratio = lp_plus_l2_kfunc(f, p) / lux;
            CHECK(ratio >= 1.0 - 1e-9);
            CHECK(ratio <= 2.0 * std::pow(2.0 / p, 1.0 / p) + 1e-9);
        }
    }
}

TEST_CASE("certification constants") {
    const std::vector<double> grid = default_cert_grid();
    for (double p : {1.0, 1.4, 2.0}) {
        const OrliczFunction m = OrliczFunction::power(p);
        CHECK(certify_p_convex(m, p, grid) == doctest::Approx(1.0));
        CHECK(certify_q_concave(m, p, grid) == doctest::Approx(1.0));
    }
    for (double p : {1.0, 1.5}) {
        const OrliczFunction m = OrliczFunction::mp(p);
        CHECK(certify_p_convex(m, p, grid) <= 1.0 + 1e-9);
        CHECK(certify_q_concave(m, 2.0, grid) <= 1.0 + 1e-9);
    }
    CHECK_THROWS_AS(certify_p_convex(OrliczFunction::power(1.0), 1.0, {0.5, 1.0}),
                    PreconditionError);
}

TEST_CASE("p-convexity certificate fails for t^{p/2} and grows under refinement") {
    const double p = 2.0;
    const OrliczFunction m = OrliczFunction::power(p / 2.0);
    const double c128 = certify_p_convex(m, p, default_cert_grid(128));
    const double c256 = certify_p_convex(m, p, default_cert_grid(256, 1e-8));
    // explicit ratio: the constant equals (1/lo)^{p/2}
    CHECK(c128 == doctest::Approx(std::pow(1e6, p / 2.0)).epsilon(1e-6));
    CHECK(c256 == doctest::Approx(std::pow(1e8, p / 2.0)).epsilon(1e-6));
    CHECK(c256 > 10.0 * c128);
}

TEST_CASE("equivalence constants on the unit interval") {
    const std::vector<double> grid = default_cert_grid();
    const OrliczFunction m = OrliczFunction::mp(1.3);
    CHECK(*equivalent_on_unit(m, m, grid) == doctest::Approx(1.0));

    for (int n : {2, 5}) {
        const OrliczFunction nn = OrliczFunction::nn(2.0, n);
        const OrliczFunction mn = OrliczFunction::mn(2.0, n);
        const double c = *equivalent_on_unit(nn, mn, grid);
        CHECK(c == doctest::Approx(nn(1.0)).epsilon(1e-9));
        CHECK(c >= 1.0);
        CHECK(c <= 2.0);
    }

    // power vs Mp blows up near 0 once the grid reaches deep enough
    CHECK_FALSE(equivalent_on_unit(OrliczFunction::power(1.0), OrliczFunction::mp(1.0),
                                   default_cert_grid(128, 1e-8))
                    .has_value());
}

TEST_CASE("Mny construction") {
    // a single nonzero coordinate reduces to M_n(t^p) with normalized argument
    const std::vector<double> e0 = {1.0, 0.0, 0.0};
    const double p = 1.5, q = 2.0 / p;
    const OrliczFunction mny = OrliczFunction::mny(p, e0);
    const OrliczFunction mn = OrliczFunction::mn(q, 3);
    const double norm = luxemburg_seq_norm(mn, {1.0});
    for (double t : {0.1, 0.5, 1.0, 2.0})
        CHECK(mny(t) == doctest::Approx(mn(std::pow(t, p) / norm)).epsilon(1e-10));

    CHECK(OrliczFunction::mny(1.0, {1.0, 1.0})(1.0) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK_THROWS_AS(OrliczFunction::mny(1.0, {0.0, 0.0}), PreconditionError);

    // membership in O_{p,2} via the certification criteria
    CounterRng rng = CounterRng::keyed(67, 0);
    const std::vector<double> grid = default_cert_grid();
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<double> y(4);
        for (double& v : y) v = rng.mixed_scale();
        const OrliczFunction m = OrliczFunction::mny(p, y);
        CHECK(m.is_normalized());
        CHECK(certify_p_convex(m, p, grid) <= 1.0 + 1e-6);
        CHECK(certify_q_concave(m, 2.0, grid) <= 1.0 + 1e-6);
    }
}

TEST_CASE("phi_from_M") {
    // M = t^2, p = 1: N_M = t^2 on [0,1] and phi_M(t) = t
    const QuasiConcaveFn phi = phi_from_M(OrliczFunction::power(2.0), 1.0);
    for (double t : {1e-6, 1e-3, 0.1, 0.5, 1.0})
        CHECK(phi(t) == doctest::Approx(t).epsilon(1e-9));
    CHECK(phi(1.0) == doctest::Approx(1.0));

    const QuasiConcaveFn phi2 = phi_from_M(OrliczFunction::mp(1.5), 1.5);
    CHECK(phi2.grid_check());

    // not 1.5-convex, certification must refuse
    CHECK_THROWS_AS(phi_from_M(OrliczFunction::power(1.0), 1.5), PreconditionError);
}

TEST_CASE("tabulated functions interpolate in log-log space") {
    std::vector<std::pair<double, double>> pts;
    for (double t : default_cert_grid(24)) pts.emplace_back(t, std::pow(t, 1.5));
    const OrliczFunction tab = OrliczFunction::tabulated(pts);
    CHECK(orlicz_grid_check(tab));
    for (double t : {2e-6, 1e-4, 0.3, 0.9})
        CHECK(tab(t) == doctest::Approx(std::pow(t, 1.5)).epsilon(1e-9));

    // concave data must fail the convexity grid check
    std::vector<std::pair<double, double>> bad;
    for (double t : default_cert_grid(24)) bad.emplace_back(t, std::sqrt(t));
    CHECK_FALSE(orlicz_grid_check(OrliczFunction::tabulated(bad)));
}

TEST_CASE("quasi-concave grid forms") {
    CHECK(QuasiConcaveFn::power(0.5).grid_check());
    std::vector<std::pair<double, double>> pts;
    for (double t : default_cert_grid(32)) pts.emplace_back(t, std::pow(t, 0.3));
    CHECK(QuasiConcaveFn::from_grid(pts).grid_check());
}
