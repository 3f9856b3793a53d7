#pragma once

// Truncated power series in the total-progeny variable s.
//
// A series holds coefficients c_0..c_T; operations silently drop degrees
// above T. For the series used here (nonnegative coefficients, composition
// arguments with constant term 0, or a constant in [0,1) against a finite
// pmf) the retained prefix is exact: degree-by-degree coefficient matching
// never receives contributions from dropped degrees.

#include <cstdint>
#include <vector>

#include "narygw/errors.hpp"
#include "narygw/offspring.hpp"

namespace narygw {

class TruncatedSeries {
public:
    // Zero series with truncation degree T >= 0.
    explicit TruncatedSeries(int truncation)
        : c_(static_cast<std::size_t>(truncation) + 1, 0.0) {
        if (truncation < 0) throw DomainError("TruncatedSeries: truncation must be >= 0");
    }

    static TruncatedSeries constant(int truncation, double c0) {
        TruncatedSeries s(truncation);
        s.c_[0] = c0;
        return s;
    }

    static TruncatedSeries monomial(int truncation, int power, double coeff = 1.0) {
        TruncatedSeries s(truncation);
        if (power <= truncation) s.c_[static_cast<std::size_t>(power)] = coeff;
        return s;
    }

    int truncation() const { return static_cast<int>(c_.size()) - 1; }

    double operator[](int t) const { return c_[static_cast<std::size_t>(t)]; }
    double& operator[](int t) { return c_[static_cast<std::size_t>(t)]; }

    const std::vector<double>& coeffs() const { return c_; }

    double eval(double s) const {
        double acc = 0.0;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * s + c_[i];
        return acc;
    }

    // Retained mass: the value at s = 1.
    double mass() const {
        double acc = 0.0;
        for (double c : c_) acc += c;
        return acc;
    }

    bool is_zero() const {
        for (double c : c_) {
            if (c != 0.0) return false;
        }
        return true;
    }

private:
    std::vector<double> c_;
};

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries scale(const TruncatedSeries& a, double c);
// Multiply by s: shifts every coefficient up one degree.
TruncatedSeries shift(const TruncatedSeries& a);
// Truncated convolution, O(T^2).
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

// T_k(phi(s)) = sum_{i>=k} p_i C(i,k) phi(s)^(i-k) as a truncated series,
// by Horner evaluation over the law's materialized coefficient list.
// Requires phi's constant term in [0,1).
TruncatedSeries series_taylor_coeff(const OffspringLaw& law, std::int64_t k,
                                    const TruncatedSeries& phi);

// G_N(psi(s), phi(s); j) = sum_{k=jN}^{jN+N-1} psi^k T_k(phi), truncated.
TruncatedSeries series_g_eval(const OffspringLaw& law, const TruncatedSeries& psi,
                              const TruncatedSeries& phi, std::int64_t j, int N);

} // namespace narygw
