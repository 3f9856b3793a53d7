#pragma once

// Joint distribution of (V_{N,n}, nu_n) via the recurrence
//
//   E(s^{nu_{n+1}}; V_{N,n+1} = j) = s G_N(psi_{N,n}(s), phi_{N,n}(s); j)
//
// with psi_{N,n}(s) = E(s^{nu_n}; V_{N,n} > 0), phi_{N,n}(s) =
// E(s^{nu_n}; V_{N,n} = 0). Base case: nu_0 = 1 and V_{N,0} = 1
// deterministically, so psi_{N,0} = s and phi_{N,0} = 0.
//
// Everything runs on truncated series; the coefficient of s^t in rows[j] is
// P(V_{N,n} = j, nu_n = t), exact for t <= T. The marginal progeny series
// h_n = psi + phi obeys the classical recursion h_{n+1} = s f(h_n), which is
// how psi is maintained: psi_{n+1} = h_{n+1} - phi_{n+1} (summing the j >= 1
// rows instead would pick up j-truncation error). For supercritical laws
// most of the nu_n mass leaves any affordable T within a few levels; the
// retained mass per level is reported so callers know which t-range is
// meaningful. Coefficients of degree <= T are exact regardless.

#include <vector>

#include "narygw/series.hpp"

namespace narygw {

struct JointStep {
    std::vector<TruncatedSeries> rows;  // rows[j] for the new level
    TruncatedSeries psi;
    TruncatedSeries phi;
};

struct JointTable {
    int N = 0;
    int n = 0;
    int T = 0;
    std::vector<TruncatedSeries> rows;   // rows[j], j = 0..j_max
    TruncatedSeries progeny;             // h_n, coefficient t = P(nu_n = t)
    std::vector<double> v_marginal;      // rows[j] evaluated at s = 1
    double retained_mass = 0.0;          // h_n(1) within the truncation
    double truncation_deficit = 0.0;     // 1 - retained_mass
    std::vector<double> level_retained;  // retained mass after each level 1..n

    JointTable() : progeny(0) {}
};

// (psi_{N,0}, phi_{N,0}) = (s, 0) at truncation degree T >= 1.
std::pair<TruncatedSeries, TruncatedSeries> joint_init(int N, int T);

// One application of the recurrence: rows[j] = s G_N(psi, phi; j) for
// j = 0..j_max, new phi = rows[0], new psi = s f(psi + phi) - new phi.
JointStep joint_step(const OffspringLaw& law, int N, const TruncatedSeries& psi,
                     const TruncatedSeries& phi, int j_max);

// n applications from the base case. j_max < 0 selects ceil(T/N), beyond
// which rows vanish identically at degrees <= T (row j has lowest degree
// jN + 1).
JointTable joint_run(const OffspringLaw& law, int N, int n, int T, int j_max = -1);

} // namespace narygw
