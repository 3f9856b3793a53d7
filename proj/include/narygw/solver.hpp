#pragma once

// Fixed-point and root solvers around tau_N = P(V_N > 0).
//
// 1 - tau_N is the smallest solution in [0,1] of x = G_N(1-x, x; 0). The
// monotone iteration tau_{N,0} = 1, 1 - tau_{N,n+1} = G_N(tau_{N,n},
// 1-tau_{N,n}; 0) decreases to tau_N; family-specific equations give the same
// value as the largest root in [0,1]:
//
//   fractional linear: 1 - p(1-tau) = (b/(1-p))^(1/N) (p tau)^(1-1/N)
//   geometric:         (tau + 1/m)^N = tau^(N-1)
//   poisson:           1 - s = P(Poisson(m s) <= N-1)
//   one-or-many:       s = p P(Binomial(r, s) >= N)        (N >= 2)
//
// Critical means sit where the nontrivial root appears: Poisson via
// y = m^c tau^c solving y^N/(N-1)! + sum_{j<N} y^j/j! = e^y, geometric via
// tangency of its root equation.

#include <cstdint>
#include <vector>

#include "narygw/gfun.hpp"
#include "narygw/offspring.hpp"

namespace narygw {

struct FixedPointResult {
    double tau = 0.0;
    std::int64_t iterations = 0;
    // |(1 - tau) - G_N(tau, 1-tau; 0)|
    double residual = 0.0;
    // tau_{N,0}, tau_{N,1}, ... when requested; non-increasing.
    std::vector<double> trajectory;
};

struct CriticalValue {
    int N = 0;
    double y = 0.0;        // m_crit * tau_crit
    double m_crit = 0.0;
    double tau_crit = 0.0;
    Family family = Family::generic;
};

// Monotone iteration from tau_{N,0} = 1, then bisection polish on
// x - G_N(1-x, x; 0). Throws NoConvergence if max_iter is hit while
// successive iterates still differ by >= tol.
FixedPointResult tau_iterate(const OffspringLaw& law, int N, double tol = 1e-12,
                             std::int64_t max_iter = 1000000,
                             bool keep_trajectory = false);

// Exactly n applications of the map: tau_{N,0..n}.
std::vector<double> tau_trajectory(const OffspringLaw& law, int N, int n);

// Largest root in [0,1] of the family equation (see above); sign-scan over a
// 1024-point grid from 1 downward, then bisection. Returns tau = 0 when only
// the trivial root exists. Throws UnsupportedFamily for generic laws.
FixedPointResult tau_family(const OffspringLaw& law, int N);

// Positive root of y^N/(N-1)! + sum_{j=0}^{N-1} y^j/j! = e^y, N >= 2.
double critical_y(int N);

// Critical offspring mean m^c_N for Family::poisson or Family::geometric
// (N = 1 returns m = 1 exactly). Geometric accuracy is about 1e-4 (grid +
// nested bisection with tangency detection); Poisson is solved to ~1e-12.
CriticalValue critical_mean(Family family, int N);

// Solution y in [0,1] of y = z e^y for z in [0, 1/e] (the Cayley tree
// function sum_{k>=1} k^(k-1) z^k / k!). Newton from y_0 = z with a
// bisection fallback near the tangent point z = 1/e.
double cayley_tree(double z);

// Sufficient condition for tau_N > 0 (N >= 2):
//   2N sum_{j>=N} p_j/(j+1) <= (1 - sum_{j<N} p_j)^2.
// Reported raw. Caveat: when p_j = 0 for all j >= N both sides vanish and
// the inequality formally holds although tau_N = 0; the condition is meant
// for laws with mass above N.
bool sufficient_condition(const OffspringLaw& law, int N);

} // namespace narygw
