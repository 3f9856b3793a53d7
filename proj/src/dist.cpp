#include "narygw/dist.hpp"

#include <cmath>

#include "narygw/discrete.hpp"
#include "narygw/gfun.hpp"
#include "narygw/solver.hpp"

namespace narygw {

namespace {

constexpr double kTailStop = 1e-12;
constexpr int kMaxJ = 10000;

PmfTable point_mass_at_zero(int N) {
    PmfTable t;
    t.N = N;
    t.probs = {1.0};
    t.mean = 0.0;
    t.tail = 0.0;
    t.tau = 0.0;
    return t;
}

void finalize(PmfTable& t) {
    double cum = 0.0;
    double mean = 0.0;
    for (std::size_t j = 0; j < t.probs.size(); ++j) {
        cum += t.probs[j];
        mean += static_cast<double>(j) * t.probs[j];
    }
    t.tail = cum < 1.0 ? 1.0 - cum : 0.0;
    t.mean = mean;
}

} // namespace

PmfTable pmf_vn(const OffspringLaw& law, int N) {
    if (N < 1) throw DomainError("pmf_vn: N must be >= 1");
    const FixedPointResult fp = tau_iterate(law, N);
    const double tau = fp.tau;
    if (tau <= 0.0) return point_mass_at_zero(N);

    PmfTable t;
    t.N = N;
    t.tau = tau;
    double cum = 0.0;
    for (int j = 0; j <= kMaxJ; ++j) {
        const double pj = g_eval(law, GBandQuery{N, j, tau, 1.0 - tau});
        t.probs.push_back(pj);
        cum += pj;
        if (cum >= 1.0 - kTailStop) break;
    }
    finalize(t);
    return t;
}

PmfTable pmf_fractional_linear(double p, double b, int N) {
    if (N < 1) throw DomainError("pmf_fractional_linear: N must be >= 1");
    const OffspringLaw law = OffspringLaw::fractional_linear(p, b);
    const FixedPointResult fp = tau_family(law, N);
    const double tau = fp.tau;
    if (tau <= 0.0) return point_mass_at_zero(N);

    const double theta = std::pow(p * tau / (1.0 - p * (1.0 - tau)), static_cast<double>(N));
    const double a = b / (p * (1.0 - p));

    PmfTable t;
    t.N = N;
    t.tau = tau;
    t.probs.push_back(1.0 - a * theta);
    double term = a * (1.0 - theta) * theta;
    double cum = t.probs[0];
    for (int j = 1; j <= kMaxJ; ++j) {
        t.probs.push_back(term);
        cum += term;
        term *= theta;
        if (cum >= 1.0 - kTailStop) break;
    }
    t.tail = cum < 1.0 ? 1.0 - cum : 0.0;
    t.mean = a * theta / (1.0 - theta);  // exact, includes the tail
    return t;
}

PmfTable pmf_poisson(double m, int N) {
    if (N < 1) throw DomainError("pmf_poisson: N must be >= 1");
    if (!(m > 0.0)) throw ParamOutOfRange("pmf_poisson: need m > 0");
    const OffspringLaw law = OffspringLaw::poisson(m);
    const FixedPointResult fp = tau_family(law, N);
    const double tau = fp.tau;
    if (tau <= 0.0) return point_mass_at_zero(N);

    const double lambda = m * tau;
    PmfTable t;
    t.N = N;
    t.tau = tau;
    double cum = 0.0;
    for (int j = 0; j <= kMaxJ; ++j) {
        // P(jN <= Y <= jN + N - 1); first band term in log space, recurrence
        // inside the band.
        const std::int64_t k_lo = static_cast<std::int64_t>(j) * N;
        double term = poisson_pmf(k_lo, lambda);
        double band = 0.0;
        for (std::int64_t k = k_lo; k < k_lo + N; ++k) {
            band += term;
            term *= lambda / static_cast<double>(k + 1);
        }
        t.probs.push_back(band);
        cum += band;
        if (cum >= 1.0 - kTailStop && static_cast<double>(k_lo) > lambda) break;
    }
    finalize(t);
    return t;
}

PmfTable pmf_one_or_many(double p, int r, int N) {
    if (N < 1 || N >= r) throw ParamOutOfRange("pmf_one_or_many: need 1 <= N < r");
    const OffspringLaw law = OffspringLaw::one_or_many(p, r);
    const FixedPointResult fp = tau_family(law, N);
    const double tau = fp.tau;
    if (tau <= 0.0) return point_mass_at_zero(N);

    PmfTable t;
    t.N = N;
    t.tau = tau;
    if (N == 1) {
        // tau_1 = 1 and the width-1 bands reduce to the offspring pmf itself.
        for (int j = 0; j <= r; ++j) {
            t.probs.push_back(g_eval(law, GBandQuery{1, j, tau, 1.0 - tau}));
        }
    } else {
        t.probs.push_back(1.0 - p + p * binomial_cdf(N - 1, r, tau));
        for (int j = 1; j * N <= r; ++j) {
            const int k_lo = j * N;
            const int u = (N - 1 < r - k_lo) ? N - 1 : r - k_lo;
            double band = 0.0;
            for (int k = k_lo; k <= k_lo + u; ++k) band += binomial_pmf(k, r, tau);
            t.probs.push_back(p * band);
        }
        // structural zeros beyond floor(r/N): support simply ends
    }
    finalize(t);
    t.tail = 0.0;  // finite support, fully enumerated
    return t;
}

double pgf_v1(const OffspringLaw& law, double s) {
    if (!(s >= 0.0 && s <= 1.0)) throw DomainError("pgf_v1: s must lie in [0,1]");
    const double q = 1.0 - tau_iterate(law, 1).tau;
    return law.pgf(q + (1.0 - q) * s);
}

} // namespace narygw
