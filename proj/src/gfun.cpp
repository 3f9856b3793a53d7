#include "narygw/gfun.hpp"

#include <cmath>

#include "narygw/discrete.hpp"

namespace narygw {

namespace {

void validate(const GBandQuery& q) {
    if (q.N < 1) throw DomainError("g_eval: N must be >= 1");
    if (q.j < 0) throw DomainError("g_eval: j must be >= 0");
    if (!(q.x >= 0.0 && q.x <= 1.0)) throw DomainError("g_eval: x must lie in [0,1]");
    if (!(q.y >= 0.0 && q.y <= 1.0)) throw DomainError("g_eval: y must lie in [0,1]");
}

} // namespace

double g_eval(const OffspringLaw& law, const GBandQuery& q) {
    validate(q);
    const std::int64_t k_lo = q.j * q.N;
    const std::int64_t k_hi = k_lo + q.N - 1;

    if (q.x == 0.0) {
        // 0^0 = 1: only the k = 0 term survives.
        return q.j == 0 ? law.pgf(q.y) : 0.0;
    }

    switch (law.family()) {
        case Family::fractional_linear:
        case Family::geometric: {
            // x^k T_k(y) = (b/(p D)) rho^k with D = 1 - p y, rho = p x / D,
            // accumulated jointly so neither factor is formed alone.
            const double p = law.param_p();
            const double b = law.param_b();
            const double d = 1.0 - p * q.y;
            const double rho = p * q.x / d;
            double acc = 0.0;
            std::int64_t k = k_lo;
            if (k == 0) {
                acc += law.pgf(q.y);
                k = 1;
            }
            if (k <= k_hi) {
                double term = (b / (p * d)) * std::pow(rho, static_cast<double>(k));
                for (; k <= k_hi; ++k) {
                    acc += term;
                    term *= rho;
                }
            }
            return acc;
        }
        case Family::poisson: {
            // x^k T_k(y) = e^{m(y-1)} (m x)^k / k!
            const double m = law.param_m();
            const double mx = m * q.x;
            double term = std::exp(static_cast<double>(k_lo) * std::log(mx) + m * (q.y - 1.0) -
                                   std::lgamma(static_cast<double>(k_lo) + 1.0));
            double acc = 0.0;
            for (std::int64_t k = k_lo; k <= k_hi; ++k) {
                acc += term;
                term *= mx / static_cast<double>(k + 1);
            }
            return acc;
        }
        case Family::one_or_many: {
            const double p = law.param_p();
            const int r = law.param_r();
            double acc = 0.0;
            for (std::int64_t k = k_lo; k <= k_hi && k <= r; ++k) {
                if (k == 0) {
                    acc += law.pgf(q.y);
                } else if (k == 1) {
                    acc += q.x * ((1.0 - p) + p * static_cast<double>(r) *
                                                  std::pow(q.y, static_cast<double>(r - 1)));
                } else if (q.y == 0.0) {
                    if (k == r) acc += p * std::pow(q.x, static_cast<double>(r));
                } else {
                    acc += p * std::exp(log_choose(r, k) +
                                        static_cast<double>(k) * std::log(q.x) +
                                        static_cast<double>(r - k) * std::log(q.y));
                }
            }
            return acc;
        }
        case Family::generic: {
            // Direct scaled sums: sum over k in the band of
            // sum_{i>=k} p_i C(i,k) x^k y^(i-k), term by term.
            const auto& pmf = law.coeffs();
            const std::int64_t K = static_cast<std::int64_t>(pmf.size()) - 1;
            double acc = 0.0;
            for (std::int64_t k = k_lo; k <= k_hi && k <= K; ++k) {
                const double xk = std::pow(q.x, static_cast<double>(k));
                double u = 1.0;  // C(i,k) y^(i-k) at i = k
                double inner = pmf[static_cast<std::size_t>(k)];
                for (std::int64_t i = k + 1; i <= K; ++i) {
                    u *= q.y * static_cast<double>(i) / static_cast<double>(i - k);
                    inner += pmf[static_cast<std::size_t>(i)] * u;
                }
                acc += xk * inner;
            }
            return acc;
        }
    }
    return 0.0;
}

double g0_slope(const OffspringLaw& law, int N, double x) {
    if (N < 1) throw DomainError("g0_slope: N must be >= 1");
    if (!(x >= 0.0 && x <= 1.0)) throw DomainError("g0_slope: x must lie in [0,1]");
    if (x == 1.0 && N >= 2) return 0.0;  // (1-x)^(N-1) kills the (possibly huge) T_N
    return static_cast<double>(N) * std::pow(1.0 - x, static_cast<double>(N - 1)) *
           law.taylor_coeff(N, x);
}

} // namespace narygw
