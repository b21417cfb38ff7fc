// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rok/construct.hpp"
#include "rok/distribution.hpp"
#include "rok/kruglov.hpp"
#include "rok/matrix.hpp"
#include "rok/orlicz.hpp"
#include "rok/report.hpp"
#include "rok/rng.hpp"

namespace rok {

// deterministic harness inputs -------------------------------------------------

std::vector<double> random_mixed_vector(CounterRng& rng, int max_len, double sparsity = 0.3);
DiscreteDistribution random_law(CounterRng& rng, int max_atoms, bool symmetric, bool positive);
Matrix random_hermitian(CounterRng& rng, int d);
Matrix random_unitary(CounterRng& rng, int d);
DecreasingStep random_step(CounterRng& rng, int max_plateaus, double total_length);

// S(x) = sum_{k<n} mu(k,x) + n^{1-1/q} (sum_{k>=n} mu^q(k,x))^{1/q}
double head_tail_sum(const std::vector<double>& x, int n, double q);

// exact permutation average (1/n!) sum_rho (sum_k x^2(rho(k)) y^2(k))^{p/2}
double kws_permutation_average(double p, const std::vector<double>& x,
                               const std::vector<double>& y);

// single checks ------------------------------------------------------------------

// band S(x)/||x||_{l_{M_n}} in [1/4, 4] over random finitely supported x
VerificationReport check_first_orlicz(int n, double q, int trials, std::uint64_t seed);

// band [1/(80n), 16/n] for one (x, y) pair; corrupt_scale != 1 perturbs the
// normalization of M_{n,y} (negative control)
VerificationReport check_kws(int n, double p, const std::vector<double>& y,
                             const std::vector<double>& x, double corrupt_scale = 1.0);
// the same band over `trials` random pairs (always including x = e_0)
VerificationReport check_kws_cell(int n, double p, int trials, std::uint64_t seed,
                                  double corrupt_scale = 1.0);

// exact sign-vector average; hard right inequality, report-only left ratio
VerificationReport check_rademacher(double p, const std::vector<Matrix>& as);

// Monte Carlo ||sum A_k||_p vs exact ||(+) A_k||_{Lp+L2}; report-only with a
// trial-doubling stability assertion
VerificationReport check_js(double p, const std::vector<DiscreteDistribution>& laws,
                            std::int64_t trials, std::uint64_t seed);

// ||(+) K x_k|| ~ ||(+) x_k|| in the Luxemburg M_p norm; band ends computed at
// runtime from the dilation-operator bounds
VerificationReport check_modified_ms(double p, const std::vector<DiscreteDistribution>& laws,
                                     int k_max = 40);

// exact enumeration over m^m points; report-only ratio vs ||a||_inf + ||a||_M
VerificationReport check_junge_pos(int m, double p, const OrliczFunction& M,
                                   const std::vector<double>& alpha);

// best constants for ||sum_{j<nm} e_j|| <= C n^{1/p} ||sum_{j<m} e_j|| and the
// lower q-estimate counterpart over n, m <= limits
VerificationReport check_upper_lower_estimates(const OrliczFunction& M, double p, double q,
                                               int n_max, int m_max);

// suites (the CLI's `verify` subcommands) ----------------------------------------

std::vector<VerificationReport> suite_first_orlicz(int trials, std::uint64_t seed);
std::vector<VerificationReport> suite_kws(int trials, std::uint64_t seed);
std::vector<VerificationReport> suite_rademacher(std::uint64_t seed);
std::vector<VerificationReport> suite_js(std::int64_t trials, std::uint64_t seed);
std::vector<VerificationReport> suite_modified_ms(std::uint64_t seed);
std::vector<VerificationReport> suite_junge_pos(std::uint64_t seed);
std::vector<VerificationReport> suite_estimates();

// name in {first-orlicz, kws, rademacher, js, modified-ms, junge-pos,
// estimates, all}; trials <= 0 picks each suite's default
std::vector<VerificationReport> run_suite(const std::string& name, std::uint64_t seed,
                                          std::int64_t trials);

// exit-code semantics: report-only checks never fail a run
bool all_hard_checks_pass(const std::vector<VerificationReport>& reports);

}  // namespace rok
