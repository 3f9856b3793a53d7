#include "narygw/offspring.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "narygw/discrete.hpp"

namespace narygw {

namespace {

constexpr std::int64_t kMaxGenericCoeffs = 1000000;

void check_prob_range(double s, const char* what) {
    if (!(s >= 0.0 && s <= 1.0)) {
        throw DomainError(std::string(what) + " must lie in [0,1]");
    }
}

} // namespace

OffspringLaw OffspringLaw::fractional_linear(double p, double b, double epsilon_tail) {
    if (!(p > 0.0 && p < 1.0)) throw ParamOutOfRange("fractional_linear: need 0 < p < 1");
    if (!(b > 0.0 && b <= 1.0 - p)) throw ParamOutOfRange("fractional_linear: need 0 < b <= 1-p");
    OffspringLaw law;
    law.family_ = Family::fractional_linear;
    law.p_ = p;
    law.b_ = b;
    law.mean_ = b / ((1.0 - p) * (1.0 - p));
    law.epsilon_tail_ = epsilon_tail;
    // p_k = b p^(k-1) for k >= 1; tail after K is b p^K / (1-p).
    std::int64_t K = 1 + static_cast<std::int64_t>(
        std::ceil(std::log(epsilon_tail * (1.0 - p) / b) / std::log(p)));
    if (K < 1) K = 1;
    law.coeffs_.resize(static_cast<std::size_t>(K) + 1);
    law.coeffs_[0] = 1.0 - b / (1.0 - p);
    double t = b;
    for (std::int64_t k = 1; k <= K; ++k) {
        law.coeffs_[static_cast<std::size_t>(k)] = t;
        t *= p;
    }
    return law;
}

OffspringLaw OffspringLaw::geometric(double p, double epsilon_tail) {
    if (!(p > 0.0 && p < 1.0)) throw ParamOutOfRange("geometric: need 0 < p < 1");
    OffspringLaw law = fractional_linear(p, p * (1.0 - p), epsilon_tail);
    law.family_ = Family::geometric;
    return law;
}

OffspringLaw OffspringLaw::geometric_from_mean(double m, double epsilon_tail) {
    if (!(m > 0.0)) throw ParamOutOfRange("geometric: need mean > 0");
    return geometric(m / (1.0 + m), epsilon_tail);
}

OffspringLaw OffspringLaw::poisson(double m, double epsilon_tail) {
    if (!(m > 0.0)) throw ParamOutOfRange("poisson: need m > 0");
    OffspringLaw law;
    law.family_ = Family::poisson;
    law.m_ = m;
    law.mean_ = m;
    law.epsilon_tail_ = epsilon_tail;
    double t = std::exp(-m);
    double cum = 0.0;
    std::int64_t k = 0;
    while (cum < 1.0 - epsilon_tail || k <= static_cast<std::int64_t>(m)) {
        if (t == 0.0 && k > 0) {  // e^{-m} underflowed; rebuild in log space
            t = poisson_pmf(k, m);
        }
        law.coeffs_.push_back(t);
        cum += t;
        ++k;
        t *= m / static_cast<double>(k);
        if (k > 10000000) break;
    }
    return law;
}

OffspringLaw OffspringLaw::one_or_many(double p, int r) {
    if (!(p > 0.0 && p < 1.0)) throw ParamOutOfRange("one_or_many: need 0 < p < 1");
    if (r <= 1) throw ParamOutOfRange("one_or_many: need integer r > 1");
    OffspringLaw law;
    law.family_ = Family::one_or_many;
    law.p_ = p;
    law.r_ = r;
    law.mean_ = (1.0 - p) + p * static_cast<double>(r);
    law.epsilon_tail_ = 0.0;
    law.coeffs_.assign(static_cast<std::size_t>(r) + 1, 0.0);
    law.coeffs_[1] = 1.0 - p;
    law.coeffs_[static_cast<std::size_t>(r)] = p;
    return law;
}

OffspringLaw OffspringLaw::generic(std::vector<double> coeffs) {
    if (coeffs.empty()) throw ParamOutOfRange("generic: empty pmf");
    if (static_cast<std::int64_t>(coeffs.size()) > kMaxGenericCoeffs + 1) {
        throw ParamOutOfRange("generic: more than 10^6 coefficients");
    }
    double sum = 0.0;
    for (double c : coeffs) {
        if (!(c >= 0.0 && c <= 1.0)) throw ParamOutOfRange("generic: p_k outside [0,1]");
        sum += c;
    }
    if (std::abs(sum - 1.0) > 1e-9) {
        throw PmfNotNormalized("generic: pmf sums to " + std::to_string(sum));
    }
    OffspringLaw law;
    law.family_ = Family::generic;
    law.epsilon_tail_ = 0.0;
    double mean = 0.0;
    for (std::size_t k = 0; k < coeffs.size(); ++k) mean += static_cast<double>(k) * coeffs[k];
    law.mean_ = mean;
    law.cdf_.resize(coeffs.size());
    double cum = 0.0;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        cum += coeffs[k];
        law.cdf_[k] = cum;
    }
    law.coeffs_ = std::move(coeffs);
    return law;
}

double OffspringLaw::pgf(double s) const {
    check_prob_range(s, "pgf argument s");
    switch (family_) {
        case Family::fractional_linear:
        case Family::geometric:
            return 1.0 - b_ / (1.0 - p_) + b_ * s / (1.0 - p_ * s);
        case Family::poisson:
            return std::exp(m_ * (s - 1.0));
        case Family::one_or_many:
            return (1.0 - p_) * s + p_ * std::pow(s, static_cast<double>(r_));
        case Family::generic: {
            double acc = 0.0;  // Horner
            for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * s + coeffs_[i];
            return acc;
        }
    }
    return 0.0;
}

double OffspringLaw::taylor_coeff(std::int64_t k, double y) const {
    if (k < 0) throw DomainError("taylor_coeff: k must be >= 0");
    check_prob_range(y, "taylor_coeff argument y");
    if (k == 0) return pgf(y);
    switch (family_) {
        case Family::fractional_linear:
        case Family::geometric: {
            // f^(k)(y)/k! = b p^(k-1) / (1 - p y)^(k+1), k >= 1
            double d = 1.0 - p_ * y;
            return b_ * std::exp(static_cast<double>(k - 1) * std::log(p_) -
                                 static_cast<double>(k + 1) * std::log(d));
        }
        case Family::poisson:
            // m^k e^{m(y-1)} / k!, accumulated in log space
            return std::exp(static_cast<double>(k) * std::log(m_) + m_ * (y - 1.0) -
                            std::lgamma(static_cast<double>(k) + 1.0));
        case Family::one_or_many: {
            if (k > r_) return 0.0;
            if (k == 1) return (1.0 - p_) + p_ * static_cast<double>(r_) *
                                               std::pow(y, static_cast<double>(r_ - 1));
            // k in [2, r]: p C(r,k) y^(r-k)
            if (y == 0.0) return k == r_ ? p_ : 0.0;
            return p_ * std::exp(log_choose(r_, k) +
                                 static_cast<double>(r_ - k) * std::log(y));
        }
        case Family::generic: {
            std::int64_t K = static_cast<std::int64_t>(coeffs_.size()) - 1;
            if (k > K) return 0.0;
            // sum_{i>=k} p_i C(i,k) y^(i-k), with u_i = C(i,k) y^(i-k)
            // maintained by u_{i+1} = u_i * (i+1)/(i+1-k) * y.
            double acc = coeffs_[static_cast<std::size_t>(k)];
            double u = 1.0;
            for (std::int64_t i = k + 1; i <= K; ++i) {
                u *= y * static_cast<double>(i) / static_cast<double>(i - k);
                acc += coeffs_[static_cast<std::size_t>(i)] * u;
            }
            return acc;
        }
    }
    return 0.0;
}

std::int64_t OffspringLaw::sample(SplitMix64& rng) const {
    switch (family_) {
        case Family::geometric: {
            // P(X >= k) = p^k; inversion.
            double u = rng.uniform01();
            return static_cast<std::int64_t>(std::log(u) / std::log(p_));
        }
        case Family::fractional_linear: {
            double p0 = 1.0 - b_ / (1.0 - p_);
            double u = rng.uniform01();
            if (u < p0) return 0;
            // conditional on X >= 1, X - 1 is geometric(p)
            double v = rng.uniform01();
            return 1 + static_cast<std::int64_t>(std::log(v) / std::log(p_));
        }
        case Family::poisson: {
            // Knuth's product method on chunks of mean <= 30; exact.
            double rem = m_;
            std::int64_t total = 0;
            while (rem > 0.0) {
                double lam = rem > 30.0 ? 30.0 : rem;
                rem -= lam;
                double limit = std::exp(-lam);
                double prod = rng.uniform01();
                std::int64_t k = 0;
                while (prod > limit) {
                    prod *= rng.uniform01();
                    ++k;
                }
                total += k;
            }
            return total;
        }
        case Family::one_or_many:
            return rng.uniform01() < p_ ? r_ : 1;
        case Family::generic: {
            double u = rng.uniform01();
            auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
            if (it == cdf_.end()) return static_cast<std::int64_t>(cdf_.size()) - 1;
            return static_cast<std::int64_t>(it - cdf_.begin());
        }
    }
    return 0;
}

bool OffspringLaw::standing_assumption(int N) const {
    switch (family_) {
        case Family::fractional_linear:
        case Family::geometric:
        case Family::poisson:
            return true;  // infinite support, every p_k < 1
        case Family::one_or_many:
            return r_ > N;
        case Family::generic: {
            for (double c : coeffs_) {
                if (c >= 1.0) return false;
            }
            for (std::size_t k = static_cast<std::size_t>(N) + 1; k < coeffs_.size(); ++k) {
                if (coeffs_[k] > 0.0) return true;
            }
            return false;
        }
    }
    return false;
}

double OffspringLaw::param_p() const {
    if (family_ == Family::fractional_linear || family_ == Family::geometric ||
        family_ == Family::one_or_many) {
        return p_;
    }
    throw UnsupportedFamily("param_p: family has no p parameter");
}

double OffspringLaw::param_b() const {
    if (family_ == Family::fractional_linear || family_ == Family::geometric) return b_;
    throw UnsupportedFamily("param_b: family has no b parameter");
}

double OffspringLaw::param_m() const {
    if (family_ == Family::poisson) return m_;
    throw UnsupportedFamily("param_m: family has no m parameter");
}

int OffspringLaw::param_r() const {
    if (family_ == Family::one_or_many) return r_;
    throw UnsupportedFamily("param_r: family has no r parameter");
}

} // namespace narygw
