#pragma once

// Stable discrete-distribution helpers. Everything that could overflow a
// factorial goes through lgamma.

#include <cmath>
#include <cstdint>
#include <limits>

namespace narygw {

inline double log_choose(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return -std::numeric_limits<double>::infinity();
    return std::lgamma(static_cast<double>(n) + 1.0) -
           std::lgamma(static_cast<double>(k) + 1.0) -
           std::lgamma(static_cast<double>(n - k) + 1.0);
}

// Binomial coefficient as a double. Exact multiplicative product while the
// running value stays below 2^53, lgamma beyond that.
inline double choose(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0.0;
    if (k > n - k) k = n - k;
    double c = 1.0;
    for (std::int64_t i = 1; i <= k; ++i) {
        c = c * static_cast<double>(n - k + i) / static_cast<double>(i);
        if (c > 9e15) return std::exp(log_choose(n, k));
    }
    return c;
}

inline double poisson_pmf(std::int64_t k, double lambda) {
    if (k < 0) return 0.0;
    if (lambda == 0.0) return k == 0 ? 1.0 : 0.0;
    return std::exp(static_cast<double>(k) * std::log(lambda) - lambda -
                    std::lgamma(static_cast<double>(k) + 1.0));
}

// P(Poisson(lambda) <= k)
inline double poisson_cdf(std::int64_t k, double lambda) {
    if (k < 0) return 0.0;
    double s = 0.0;
    for (std::int64_t i = 0; i <= k; ++i) s += poisson_pmf(i, lambda);
    return s < 1.0 ? s : 1.0;
}

inline double binomial_pmf(std::int64_t k, std::int64_t n, double q) {
    if (k < 0 || k > n) return 0.0;
    if (q <= 0.0) return k == 0 ? 1.0 : 0.0;
    if (q >= 1.0) return k == n ? 1.0 : 0.0;
    return std::exp(log_choose(n, k) + static_cast<double>(k) * std::log(q) +
                    static_cast<double>(n - k) * std::log1p(-q));
}

// P(Binomial(n, q) <= k)
inline double binomial_cdf(std::int64_t k, std::int64_t n, double q) {
    if (k < 0) return 0.0;
    if (k >= n) return 1.0;
    double s = 0.0;
    for (std::int64_t i = 0; i <= k; ++i) s += binomial_pmf(i, n, q);
    return s < 1.0 ? s : 1.0;
}

} // namespace narygw
