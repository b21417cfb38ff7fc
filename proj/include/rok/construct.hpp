// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "rok/orlicz.hpp"
#include "rok/report.hpp"
#include "rok/step.hpp"

namespace rok {

// Root sequences behind the quasi-concave -> step function construction.
// t_k solves phi(t) = 2^{-k}, s_k solves s/phi(s) = 2^{-k}; u interleaves
// them (u_0 = 1, u_1 = s_1, u_{2k} = max{t_l < u_{2k-1}},
// u_{2k+1} = max{s_l <= u_{2k}}); v_k are tail cumulative plateau lengths.
struct BkSequences {
    std::vector<double> t;
    std::vector<double> s;
    std::vector<double> u;
    std::vector<double> v;
    std::vector<double> u_even;      // u_{2k} actually used for plateaus
    std::vector<double> phi_u_even;  // phi(u_{2k}), exact dyadic targets
    bool finite_branch = false;      // s-recursion terminated (phi'(0) finite)
    double truncation_tail = 0.0;    // sum of phi(u_{2k}) dropped by depth/overflow caps
    double d = 0.0;
};

struct BkBuild {
    BkSequences seq;
    DecreasingStep x;  // positive decreasing, ||x||_1 <= 1
};

// For quasi-concave phi with phi(0)=0, phi(1)=1 and d > 1, builds a positive
// decreasing x with (1/4) phi(t) <= int min{x, t x^d} <= (5/2) phi(t).
BkBuild bk_build(const QuasiConcaveFn& phi, double d, int depth = 60);

// G(t) = int_0^1 min{x(s), t x(s)^d} ds, exact plateau-wise
double bk_g(const DecreasingStep& x, double d, double t);

// Ratio check G(t)/phi(t) against [1/4, 5/2] on (0,1] and the extended band
// [1/12, 5/2] for t >= 1.
VerificationReport bk_verify(const QuasiConcaveFn& phi, const DecreasingStep& x, double d,
                             const std::vector<double>& t_grid);

// Full chain M -> (N_M, phi_M, x_M, M') with the two-sided norm band report.
struct XmChain {
    OrliczFunction n_m;
    QuasiConcaveFn phi_m;
    BkBuild bk;
    OrliczFunction m_prime;
    VerificationReport report;
};

// Requires M certified p-convex/2-concave with M(1)=1 and M(t)/t^p vanishing
// at 0; throws PreconditionError with "l_p-like core; chain void" otherwise.
XmChain xm_chain(const OrliczFunction& m, double p, int depth = 60, int trials = 100,
                 std::uint64_t seed = 0);

// Orlicz function M(t) = int_0^1 M_p(t mu(s, A0)) ds for A0 of total length 1.
OrliczFunction orlicz_from_a0(const DecreasingStep& a0, double p);

// Both sides of the ||A0 (x) A||_{Lp+L2} = ||A||_{l_M} identity, evaluated
// independently (Luxemburg M_p norm of the rearranged tensor vs l_M norm).
struct MsIdentityPair {
    double tensor_side;
    double orlicz_side;
};
MsIdentityPair ms_identity_pair(const DecreasingStep& a0, double p, const std::vector<double>& a);

// M_{n,y_s} for the pointwise embedding images y_s = (f_k(s))_k.
OrliczFunction rs_orlicz_at_point(const std::vector<DecreasingStep>& fs, double p, double s);

}  // namespace rok
