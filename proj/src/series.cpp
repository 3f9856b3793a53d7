#include "narygw/series.hpp"

#include <cmath>

namespace narygw {

namespace {

void check_same_truncation(const TruncatedSeries& a, const TruncatedSeries& b,
                           const char* op) {
    if (a.truncation() != b.truncation()) {
        throw TruncationMismatch(std::string(op) + ": truncation degrees differ");
    }
}

} // namespace

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
    check_same_truncation(a, b, "add");
    TruncatedSeries out(a.truncation());
    for (int t = 0; t <= a.truncation(); ++t) out[t] = a[t] + b[t];
    return out;
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    check_same_truncation(a, b, "sub");
    TruncatedSeries out(a.truncation());
    for (int t = 0; t <= a.truncation(); ++t) out[t] = a[t] - b[t];
    return out;
}

TruncatedSeries scale(const TruncatedSeries& a, double c) {
    TruncatedSeries out(a.truncation());
    for (int t = 0; t <= a.truncation(); ++t) out[t] = c * a[t];
    return out;
}

TruncatedSeries shift(const TruncatedSeries& a) {
    TruncatedSeries out(a.truncation());
    for (int t = a.truncation(); t >= 1; --t) out[t] = a[t - 1];
    return out;
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    check_same_truncation(a, b, "mul");
    const int T = a.truncation();
    TruncatedSeries out(T);
    for (int i = 0; i <= T; ++i) {
        const double ai = a[i];
        if (ai == 0.0) continue;
        for (int k = i; k <= T; ++k) out[k] += ai * b[k - i];
    }
    return out;
}

TruncatedSeries series_taylor_coeff(const OffspringLaw& law, std::int64_t k,
                                    const TruncatedSeries& phi) {
    if (k < 0) throw DomainError("series_taylor_coeff: k must be >= 0");
    if (!(phi[0] >= 0.0 && phi[0] < 1.0)) {
        throw DomainError("series_taylor_coeff: phi constant term must lie in [0,1)");
    }
    const int T = phi.truncation();
    const auto& pmf = law.coeffs();
    const std::int64_t K = static_cast<std::int64_t>(pmf.size()) - 1;
    if (k > K) return TruncatedSeries(T);

    // Weights w_d = p_{k+d} C(k+d, k); Horner from the top degree down.
    const std::int64_t D = K - k;
    std::vector<double> w(static_cast<std::size_t>(D) + 1);
    double binom = 1.0;
    for (std::int64_t d = 0; d <= D; ++d) {
        if (d > 0) binom *= static_cast<double>(k + d) / static_cast<double>(d);
        w[static_cast<std::size_t>(d)] = pmf[static_cast<std::size_t>(k + d)] * binom;
    }
    TruncatedSeries acc = TruncatedSeries::constant(T, w[static_cast<std::size_t>(D)]);
    for (std::int64_t d = D - 1; d >= 0; --d) {
        acc = mul(acc, phi);
        acc[0] += w[static_cast<std::size_t>(d)];
    }
    return acc;
}

TruncatedSeries series_g_eval(const OffspringLaw& law, const TruncatedSeries& psi,
                              const TruncatedSeries& phi, std::int64_t j, int N) {
    check_same_truncation(psi, phi, "series_g_eval");
    if (N < 1) throw DomainError("series_g_eval: N must be >= 1");
    if (j < 0) throw DomainError("series_g_eval: j must be >= 0");
    if (!(psi[0] >= 0.0 && psi[0] < 1.0)) {
        throw DomainError("series_g_eval: psi constant term must lie in [0,1)");
    }
    const int T = psi.truncation();
    const std::int64_t k_lo = j * N;

    // psi^(k_lo) by square-and-multiply; with zero constant term, psi^k
    // vanishes entirely once k > T.
    if (psi[0] == 0.0 && k_lo > T) return TruncatedSeries(T);
    TruncatedSeries pw = TruncatedSeries::constant(T, 1.0);
    {
        std::int64_t e = k_lo;
        TruncatedSeries base = psi;
        while (e > 0) {
            if (e & 1) pw = mul(pw, base);
            e >>= 1;
            if (e > 0) base = mul(base, base);
        }
    }

    TruncatedSeries acc(T);
    for (std::int64_t k = k_lo; k <= k_lo + N - 1; ++k) {
        if (pw.is_zero()) break;  // higher powers stay zero
        acc = add(acc, mul(pw, series_taylor_coeff(law, k, phi)));
        if (k < k_lo + N - 1) pw = mul(pw, psi);
    }
    return acc;
}

} // namespace narygw
