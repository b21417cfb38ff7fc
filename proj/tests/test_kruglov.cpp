// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>

#include "rok/kruglov.hpp"
#include "rok/rng.hpp"
#include "rok/tensor.hpp"
#include "rok/verify.hpp"

using namespace rok;

namespace {

double poisson_pmf(int n) { return std::exp(-1.0 - std::lgamma(n + 1.0)); }

HermitianElement diag_element(const std::vector<double>& d) {
    return {Matrix::diag(d), TraceMode::Normalized};
}

}  // namespace

TEST_CASE("transform of a unit point mass is the Poisson law") {
    const KruglovResult kr = kruglov_exact(DiscreteDistribution::delta(1.0), 20);
    REQUIRE(kr.mixture.atoms().size() == 21);
    for (int n = 0; n <= 20; ++n) {
        const Atom& a = kr.mixture.atoms()[static_cast<std::size_t>(n)];
        CHECK(a.value == doctest::Approx(n).epsilon(1e-14));
        CHECK(std::abs(a.mass - poisson_pmf(n)) < 1e-15);
    }
    CHECK(kr.tail_mass < 1e-19);
    CHECK(kr.tail_mass > 0.0);
}

TEST_CASE("degenerate and symmetric laws") {
    const KruglovResult zero = kruglov_exact(DiscreteDistribution::delta(0.0), 10);
    REQUIRE(zero.mixture.atoms().size() == 1);
    CHECK(zero.mixture.atoms()[0].value == 0.0);
    CHECK(zero.mixture.atoms()[0].mass ==
          doctest::Approx(1.0 - zero.tail_mass).epsilon(1e-13));

    const DiscreteDistribution pm =
        DiscreteDistribution::from_atoms({{1.0, 0.5}, {-1.0, 0.5}});
    const KruglovResult sym = kruglov_exact(pm, 16);
    CHECK(sym.mixture.is_symmetric(1e-12));

    // equal laws get equal transforms
    CounterRng rng = CounterRng::keyed(71, 0);
    const DiscreteDistribution law = random_law(rng, 4, false, false);
    const KruglovResult a = kruglov_exact(law, 12);
    const KruglovResult b = kruglov_exact(law, 12);
    REQUIRE(a.mixture.atoms().size() == b.mixture.atoms().size());
    for (std::size_t i = 0; i < a.mixture.atoms().size(); ++i) {
        CHECK(a.mixture.atoms()[i].value == b.mixture.atoms()[i].value);
        CHECK(a.mixture.atoms()[i].mass == b.mixture.atoms()[i].mass);
    }
}

TEST_CASE("positivity, mean and second moment carry over") {
    CounterRng rng = CounterRng::keyed(73, 0);
    for (int trial = 0; trial < 10; ++trial) {
        const DiscreteDistribution law = random_law(rng, 4, false, /*positive=*/true);
        const KruglovResult kr = kruglov_exact(law, 30);
        CHECK(kr.mixture.is_nonnegative());
        CHECK(kr.mixture.mean() == doctest::Approx(law.mean()).epsilon(1e-9));
        const double expected = law.second_moment() + law.mean() * law.mean();
        CHECK(kr.mixture.second_moment() == doctest::Approx(expected).epsilon(1e-9));
    }
}

TEST_CASE("characteristic function identity") {
    const DiscreteDistribution d1 = DiscreteDistribution::delta(1.0);
    for (double t : {0.0, 0.3, 1.0, -2.2}) {
        const auto expected = std::exp(std::exp(std::complex<double>(0.0, t)) - 1.0);
        CHECK(std::abs(kruglov_charfn(d1, t) - expected) < 1e-14);
        CHECK(std::abs(kruglov_charfn(d1, t)) <= 1.0 + 1e-14);
    }
    CHECK(kruglov_charfn(d1, 0.0) == std::complex<double>(1.0, 0.0));

    CounterRng rng = CounterRng::keyed(79, 0);
    for (int trial = 0; trial < 5; ++trial) {
        const DiscreteDistribution law = random_law(rng, 4, false, false);
        const KruglovResult kr = kruglov_exact(law, 20);
        for (double t = -5.0; t <= 5.0; t += 0.5) {
            const auto lhs = kr.mixture.charfn(t);
            const auto rhs = kruglov_charfn(law, t);
            CHECK(std::abs(lhs - rhs) <= kr.tail_mass + 1e-8);
        }
    }
}

TEST_CASE("Monte Carlo realization") {
    const DiscreteDistribution zero = DiscreteDistribution::delta(0.0);
    const DiscreteDistribution z = kruglov_mc(zero, 1, 1000);
    REQUIRE(z.atoms().size() == 1);
    CHECK(z.atoms()[0].value == 0.0);

    const DiscreteDistribution d1 = DiscreteDistribution::delta(1.0);
    const DiscreteDistribution a = kruglov_mc(d1, 7, 20000);
    const DiscreteDistribution b = kruglov_mc(d1, 7, 20000);
    REQUIRE(a.atoms().size() == b.atoms().size());
    for (std::size_t i = 0; i < a.atoms().size(); ++i) {
        CHECK(a.atoms()[i].value == b.atoms()[i].value);
        CHECK(a.atoms()[i].mass == b.atoms()[i].mass);
    }
    CHECK(ks_distance(a, kruglov_mc(d1, 8, 20000)) > 0.0);  // the seed matters

    const std::int64_t trials = 1000000;
    const DiscreteDistribution emp = kruglov_mc(d1, 0, trials);
    for (int n = 0; n <= 6; ++n)
        CHECK(std::abs(emp.mass_at(n) - poisson_pmf(n)) < 4e-3);  // 4 sigma at 1e6 trials
    CHECK(ks_distance(emp, kruglov_exact(d1, 30).mixture) < 4.0 / std::sqrt(trials));
}

TEST_CASE("submajorization bound on the transform") {
    CHECK(maj_bound_check(DiscreteDistribution::delta(1.0), 20).pass);
    CHECK(maj_bound_check(DiscreteDistribution::delta(0.0), 8).pass);
    const DiscreteDistribution uniform = DiscreteDistribution::from_atoms(
        {{0.2, 0.2}, {0.4, 0.2}, {0.6, 0.2}, {0.8, 0.2}, {1.0, 0.2}});
    CHECK(maj_bound_check(uniform, 20).pass);
}

TEST_CASE("spectral transform flattens to the commutative one") {
    const HermitianElement x = diag_element({0.7, -0.7});
    const TruncatedFockSum fock = nc_kruglov_spectral(x, 12);

    // block 2 is the convolution square of the two-point eigenvalue law
    const DiscreteDistribution& b2 = fock.blocks[2];
    CHECK(b2.mass_at(1.4) == doctest::Approx(0.25));
    CHECK(b2.mass_at(0.0) == doctest::Approx(0.5));
    CHECK(b2.mass_at(-1.4) == doctest::Approx(0.25));

    const KruglovResult direct = kruglov_exact(eigenvalue_law(x), 12);
    const DiscreteDistribution flat = fock.flatten();
    REQUIRE(flat.atoms().size() == direct.mixture.atoms().size());
    for (std::size_t i = 0; i < flat.atoms().size(); ++i) {
        CHECK(flat.atoms()[i].value ==
              doctest::Approx(direct.mixture.atoms()[i].value).epsilon(1e-12));
        CHECK(flat.atoms()[i].mass ==
              doctest::Approx(direct.mixture.atoms()[i].mass).epsilon(1e-12));
    }

    // trace and second moment carry over within the truncation tail
    CounterRng rng = CounterRng::keyed(83, 0);
    const Matrix h = random_hermitian(rng, 3);
    const HermitianElement e{h, TraceMode::Normalized};
    const TruncatedFockSum f2 = nc_kruglov_spectral(e, 18);
    const double tau = h.trace().real() / 3.0;
    const double tau2 = (h * h).trace().real() / 3.0;
    CHECK(std::abs(f2.trace() - tau) < 1e-9);
    CHECK(std::abs(f2.second_moment() - (tau2 + tau * tau)) < 1e-8);

    CHECK_THROWS_AS(nc_kruglov_spectral({h, TraceMode::Counting}, 8), PreconditionError);
}

TEST_CASE("fock block weights and tail add to one") {
    const HermitianElement x{Matrix::diag({0.3, -0.5}), TraceMode::Normalized};
    for (int k_max : {1, 4, 12}) {
        const TruncatedFockSum fock = nc_kruglov_spectral(x, k_max);
        KahanSum total;
        for (double w : fock.weights) total.add(w);
        total.add(fock.tail_mass);
        CHECK(total.value() == doctest::Approx(1.0).epsilon(1e-12));
        // block 0 is the zero atom
        REQUIRE(fock.blocks[0].atoms().size() == 1);
        CHECK(fock.blocks[0].atoms()[0].value == 0.0);
    }
}

TEST_CASE("tensor sums are fixed by the symmetric expectation") {
    CounterRng rng = CounterRng::keyed(88, 0);
    const Matrix x = random_hermitian(rng, 2);
    for (int k = 1; k <= 3; ++k) {
        const TensorElement yk = nc_kruglov_tensor(x, k);
        CHECK(max_abs_diff(sym_expectation(yk).m, yk.m) < 1e-12);
    }
}

TEST_CASE("tensor blocks agree with the spectral path") {
    CounterRng rng = CounterRng::keyed(89, 0);
    const Matrix x = random_hermitian(rng, 2);
    const HermitianElement el{x, TraceMode::Normalized};
    const TruncatedFockSum fock = nc_kruglov_spectral(el, 4);
    for (int k = 1; k <= 4; ++k) {
        const TensorElement yk = nc_kruglov_tensor(x, k);
        const std::vector<double> eig = hermitian_eigenvalues(yk.m);
        // eigenvalues with weight 2^{-k} match the block atoms
        std::vector<Atom> atoms;
        for (double v : eig) atoms.push_back({v, std::pow(0.5, k)});
        const DiscreteDistribution tensor_law = DiscreteDistribution::from_atoms(atoms);
        const DiscreteDistribution& block = fock.blocks[static_cast<std::size_t>(k)];
        REQUIRE(tensor_law.atoms().size() == block.atoms().size());
        for (std::size_t i = 0; i < block.atoms().size(); ++i) {
            CHECK(tensor_law.atoms()[i].value ==
                  doctest::Approx(block.atoms()[i].value).epsilon(1e-10));
            CHECK(tensor_law.atoms()[i].mass ==
                  doctest::Approx(block.atoms()[i].mass).epsilon(1e-10));
        }
    }

    // a d = 3 spot check against the same convolution law
    const Matrix x3 = random_hermitian(rng, 3);
    const TruncatedFockSum fock3 = nc_kruglov_spectral({x3, TraceMode::Normalized}, 2);
    std::vector<Atom> atoms3;
    for (double v : hermitian_eigenvalues(nc_kruglov_tensor(x3, 2).m))
        atoms3.push_back({v, 1.0 / 9.0});
    const DiscreteDistribution law3 = DiscreteDistribution::from_atoms(atoms3);
    REQUIRE(law3.atoms().size() == fock3.blocks[2].atoms().size());
    for (std::size_t i = 0; i < law3.atoms().size(); ++i)
        CHECK(law3.atoms()[i].value ==
              doctest::Approx(fock3.blocks[2].atoms()[i].value).epsilon(1e-9));
}

TEST_CASE("explicit small tensor sums") {
    const Matrix x = Matrix::diag({1.0, 0.0});
    CHECK(max_abs_diff(nc_kruglov_tensor(x, 1).m, x) == 0.0);
    const Matrix y2 = nc_kruglov_tensor(x, 2).m;
    const Matrix expected = Matrix::diag({2.0, 1.0, 1.0, 0.0});
    CHECK(max_abs_diff(y2, expected) < 1e-14);

    // y_2 lies in the symmetric subalgebra
    const TensorElement proj = sym_expectation({2, 2, y2});
    CHECK(max_abs_diff(proj.m, y2) < 1e-13);

    CHECK_THROWS_AS(nc_kruglov_tensor(Matrix::identity(4), 4), PreconditionError);
    CHECK_THROWS_AS(nc_kruglov_tensor(Matrix::identity(3), 5), PreconditionError);
    CHECK(nc_kruglov_tensor(Matrix::identity(3), 4).m.dim() == 81);  // exactly at the cap
}

TEST_CASE("symmetrization is the permutation average") {
    CounterRng rng = CounterRng::keyed(97, 0);
    const Matrix a = random_hermitian(rng, 2), b = random_hermitian(rng, 2);
    const TensorElement e2 = symmetrize({a, b});
    const Matrix expected = (kron(a, b) + kron(b, a)) * cplx(0.5, 0.0);
    CHECK(max_abs_diff(e2.m, expected) < 1e-13);

    // permutation-invariant input is fixed
    const TensorElement cube = symmetrize({a, a, a});
    CHECK(max_abs_diff(cube.m, tensor_product({a, a, a}).m) < 1e-12);
}

TEST_CASE("symmetrization: idempotence, trace preservation, positivity") {
    CounterRng rng = CounterRng::keyed(101, 0);
    for (int trial = 0; trial < 10; ++trial) {
        const int k = 2 + static_cast<int>(rng.next_below(2));
        std::vector<Matrix> legs;
        for (int i = 0; i < k; ++i) legs.push_back(random_hermitian(rng, 2));
        const TensorElement u = tensor_product(legs);
        const TensorElement once = sym_expectation(u);
        const TensorElement twice = sym_expectation(once);
        CHECK(max_abs_diff(once.m, twice.m) < 1e-12);
        CHECK(std::abs(once.m.trace() - u.m.trace()) < 1e-11);

        // squares are positive and stay positive under the expectation
        std::vector<Matrix> sq;
        for (const Matrix& l : legs) sq.push_back(l * l);
        const std::vector<double> eig = hermitian_eigenvalues(sym_expectation(tensor_product(sq)).m);
        CHECK(eig.back() > -1e-11);
    }
}

TEST_CASE("rebalanced symmetrized sum equals the plain tensor sum") {
    // hand expansion at n = 2: 2 E_2(x (x) (1-e)) + 2 E_2(x (x) e) = x (x) 1 + 1 (x) x
    CounterRng rng = CounterRng::keyed(103, 0);
    const Matrix e = Matrix::diag({1.0, 0.0});
    const Matrix x = random_hermitian(rng, 2);
    const Matrix id = Matrix::identity(2);
    const Matrix q = id - e;
    const Matrix lhs = (kron(x, q) + kron(q, x)) + (kron(x, e) + kron(e, x));
    const Matrix rhs = kron(x, id) + kron(id, x);
    CHECK(max_abs_diff(lhs, rhs) < 1e-13);

    CHECK(check_strange_equality(2, x, e).pass);
    CHECK(check_strange_equality(2, e, e).pass);  // x = e degenerates

    for (int n : {3, 4}) {
        const Matrix xr = random_hermitian(rng, 2);
        CHECK(check_strange_equality(n, xr, e).pass);
    }
}

TEST_CASE("compressed symmetrized powers multiply") {
    const Matrix e = Matrix::diag({1.0, 0.0});
    CHECK(check_alpha_multiplicative(3, 2, e, e, e).pass);  // alpha(e)^2 = alpha(e)

    CounterRng rng = CounterRng::keyed(107, 0);
    for (int trial = 0; trial < 5; ++trial) {
        Matrix x = random_hermitian(rng, 2), y = random_hermitian(rng, 2);
        x = e * x * e;
        y = e * y * e;
        CHECK(check_alpha_multiplicative(3, 1, x, y, e).pass);
        CHECK(check_alpha_multiplicative(4, 2, x, y, e).pass);
    }

    // uncompressed arguments are a contract violation, not a band failure
    const Matrix bad = random_hermitian(rng, 2);
    const VerificationReport rep = check_alpha_multiplicative(3, 1, bad, bad, e);
    CHECK_FALSE(rep.pass);
    CHECK(rep.note.find("precondition") != std::string::npos);
}

TEST_CASE("compressed embedding is multiplicative on symmetric tensors") {
    // pi_{n,k}(z1) pi_{n,k}(z2) = pi_{n,k}(z1 z2) for symmetric z over eNe
    CounterRng rng = CounterRng::keyed(108, 0);
    const Matrix e = Matrix::diag({1.0, 0.0});
    for (int trial = 0; trial < 5; ++trial) {
        const Matrix u1 = e * random_hermitian(rng, 2) * e;
        const Matrix u2 = e * random_hermitian(rng, 2) * e;
        const Matrix v1 = e * random_hermitian(rng, 2) * e;
        const Matrix v2 = e * random_hermitian(rng, 2) * e;
        const TensorElement z1 = symmetrize({u1, u2});
        const TensorElement z2 = symmetrize({v1, v2});
        const int n = 3;
        const Matrix lhs = pi_nk(z1, e, n).m * pi_nk(z2, e, n).m;
        const TensorElement prod{2, 2, z1.m * z2.m};
        const Matrix rhs = pi_nk(prod, e, n).m;
        CHECK(max_abs_diff(lhs, rhs) < 1e-10);
        // on k-fold powers it reduces to the compressed power map
        CHECK(max_abs_diff(pi_nk(symmetrize({u1, u1}), e, n).m, alpha_nk(u1, e, n, 2).m) < 1e-12);
    }
}

TEST_CASE("commutator identity on tensor blocks") {
    CounterRng rng = CounterRng::keyed(109, 0);
    const Matrix x = random_hermitian(rng, 2), y = random_hermitian(rng, 2);
    CHECK(check_commutator_identity(x, y, 3).pass);

    // commuting inputs make both sides vanish
    const Matrix a = Matrix::diag({0.3, -0.8}), b = Matrix::diag({1.0, 2.0});
    const VerificationReport rep = check_commutator_identity(a, b, 3);
    CHECK(rep.pass);
    CHECK(rep.max_deviation < 1e-14);
    CHECK(check_commutator_identity(x, Matrix::identity(2), 3).max_deviation < 1e-12);
}

TEST_CASE("disjointly supported pieces have multiplicative characteristic functions") {
    std::vector<double> grid;
    for (int i = -5; i <= 5; ++i) grid.push_back(0.6 * i);

    const Matrix x1 = Matrix::diag({0.9, 0.0, 0.0});
    const Matrix x2 = Matrix::diag({0.0, -1.7, 0.0});
    CHECK(check_independence_charfn({x1}, grid).pass);
    CHECK(check_independence_charfn({x1, x2}, grid).pass);

    const Matrix overlap = Matrix::diag({1.0, 1.0, 0.0});
    const VerificationReport rep = check_independence_charfn({x1, overlap}, grid);
    CHECK_FALSE(rep.pass);
    CHECK(rep.note.find("precondition") != std::string::npos);
}

TEST_CASE("atom explosion guard") {
    std::vector<Atom> atoms;
    for (int i = 0; i < 60; ++i) atoms.push_back({std::exp(i / 7.0), 1.0 / 60});
    const DiscreteDistribution wide = DiscreteDistribution::from_atoms(atoms);
    CHECK_THROWS_AS(kruglov_exact(wide, 20, 20000), AtomExplosionError);
}
