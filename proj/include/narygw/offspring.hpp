#pragma once

// Offspring laws of a Galton-Watson process.
//
// A law exposes its pgf f(s) = sum_k p_k s^k, the scaled Taylor coefficients
// T_k(y) = f^(k)(y)/k!, its mean m = f'(1), a materialized pmf (truncated at
// tail mass <= epsilon_tail for infinite-support families), and an exact
// sampler. Derivatives are only ever handled in the scaled form T_k; raw
// f^(k) values overflow for large k while x^k * T_k(y) stays tame.
//
// Supported families:
//   fractional_linear(p, b): f(s) = 1 - b/(1-p) + b s/(1-p s),
//                            p_k = b p^(k-1) (k>=1), 0<p<1, 0<b<=1-p
//   geometric(p):            p_k = (1-p) p^k, the b = p(1-p) sub-case
//   poisson(m):              f(s) = e^{m(s-1)}, m > 0
//   one_or_many(p, r):       f(s) = (1-p) s + p s^r, p in (0,1), integer r > 1
//   generic(coeffs):         finite pmf p_0..p_K, K <= 10^6, must sum to 1

#include <cstdint>
#include <vector>

#include "narygw/errors.hpp"
#include "narygw/rng.hpp"

namespace narygw {

enum class Family { fractional_linear, geometric, poisson, one_or_many, generic };

class OffspringLaw {
public:
    static constexpr double kDefaultTail = 1e-12;

    static OffspringLaw fractional_linear(double p, double b, double epsilon_tail = kDefaultTail);
    static OffspringLaw geometric(double p, double epsilon_tail = kDefaultTail);
    // Convenience: geometric with mean m, i.e. p = m/(1+m).
    static OffspringLaw geometric_from_mean(double m, double epsilon_tail = kDefaultTail);
    static OffspringLaw poisson(double m, double epsilon_tail = kDefaultTail);
    static OffspringLaw one_or_many(double p, int r);
    static OffspringLaw generic(std::vector<double> coeffs);

    Family family() const noexcept { return family_; }
    double mean() const noexcept { return mean_; }
    double epsilon_tail() const noexcept { return epsilon_tail_; }

    // f(s) for s in [0,1].
    double pgf(double s) const;

    // T_k(y) = f^(k)(y)/k!, y in [0,1].
    double taylor_coeff(std::int64_t k, double y) const;

    // One exact draw of the offspring count.
    std::int64_t sample(SplitMix64& rng) const;

    // Materialized pmf p_0..p_K. Exact for finite-support families; truncated
    // at tail mass <= epsilon_tail otherwise.
    const std::vector<double>& coeffs() const { return coeffs_; }

    // Standing assumption as a queryable predicate: p_k < 1 for all k and
    // p_k > 0 for some k > N. N-dependent, hence not a constructor check.
    bool standing_assumption(int N) const;

    // Family parameters. Throw UnsupportedFamily when the parameter does not
    // belong to this family.
    double param_p() const;
    double param_b() const;
    double param_m() const;
    int param_r() const;

private:
    OffspringLaw() = default;

    Family family_ = Family::generic;
    double p_ = 0.0;      // fractional_linear/geometric/one_or_many
    double b_ = 0.0;      // fractional_linear (geometric stores b = p(1-p))
    double m_ = 0.0;      // poisson
    int r_ = 0;           // one_or_many
    double mean_ = 0.0;
    double epsilon_tail_ = kDefaultTail;
    std::vector<double> coeffs_;
    std::vector<double> cdf_;  // sampling table for generic laws
};

} // namespace narygw
