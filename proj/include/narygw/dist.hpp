#pragma once

// Distribution of V_N, the number of disjoint complete N-ary subtrees of
// infinite height rooted at the ancestor.
//
// Generic route: P(V_N = j) = G_N(tau_N, 1 - tau_N; j).
// Closed forms: fractional linear offspring makes V_N zero-modified
// geometric; Poisson offspring makes V_N a band count of Y ~ Poisson(m tau);
// one-or-many offspring makes V_N a band count of Binomial(r, tau).

#include <vector>

#include "narygw/offspring.hpp"

namespace narygw {

struct PmfTable {
    int N = 0;
    std::vector<double> probs;  // P(V_N = j), j = 0..j_max
    double mean = 0.0;
    double tail = 0.0;          // unassigned mass beyond j_max
    double tau = 0.0;           // the tau_N used
};

// Theorem-1 route for any law; tau via tau_iterate. Bands accumulated until
// the tail drops below 1e-12 (or j hits 10^4).
PmfTable pmf_vn(const OffspringLaw& law, int N);

// Zero-modified geometric law of V_N:
//   theta_N = (p tau / (1 - p(1-tau)))^N,
//   P(V_N=j) = (b/(p(1-p))) (1-theta) theta^j   (j >= 1),
//   E V_N    = (b/(p(1-p))) theta/(1-theta).
// The geometric sub-case b = p(1-p) collapses to theta = tau.
PmfTable pmf_fractional_linear(double p, double b, int N);

// P(V_N=j) = P(jN <= Y <= jN+N-1), Y ~ Poisson(m tau_N).
PmfTable pmf_poisson(double m, int N);

// P(V_N=0) = 1-p + p P(B <= N-1); P(V_N=j) = p P(jN <= B <= jN+U) with
// U = min(N-1, r-jN) for 1 <= j <= floor(r/N), zero beyond; B ~ Binomial(r,
// tau_N). Those binomial forms hold for N >= 2; for N = 1 the width-1
// Theorem-1 bands apply directly (tau_1 = 1 since p_0 = 0, so V_1 = Z_1).
PmfTable pmf_one_or_many(double p, int r, int N);

// E(s^{V_1}) = f(q + (1-q)s), q the extinction probability.
double pgf_v1(const OffspringLaw& law, double s);

} // namespace narygw
