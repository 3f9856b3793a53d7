#include "narygw/solver.hpp"

#include <cmath>
#include <functional>
#include <limits>

#include "narygw/discrete.hpp"

namespace narygw {

namespace {

// The fixed-point map Phi(x) = G_N(1-x, x; 0) acting on x = P(no subtree).
double phi_map(const OffspringLaw& law, int N, double x) {
    double v = g_eval(law, GBandQuery{N, 0, 1.0 - x, x});
    if (v < 0.0) v = 0.0;
    if (v > 1.0) v = 1.0;
    return v;
}

double bisect(const std::function<double(double)>& f, double lo, double hi) {
    // f(lo) and f(hi) have opposite signs (or one is zero); refine to the
    // last representable interval.
    double flo = f(lo);
    for (int it = 0; it < 200 && hi - lo > 1e-16 * (1.0 + hi); ++it) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((flo < 0.0) == (fm < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

// Largest s in [lo_excl, 1] with E(s) = 0, scanning a grid from 1 downward
// for the first sign change. Returns negative when no nontrivial root exists.
double largest_root(const std::function<double(double)>& E, int grid) {
    double s_hi = 1.0;
    double e_hi = E(s_hi);
    if (e_hi == 0.0) return 1.0;
    for (int i = grid - 1; i >= 0; --i) {
        const double s_lo = static_cast<double>(i) / grid;
        const double e_lo = E(s_lo);
        if (e_lo == 0.0 && s_lo > 0.0) return s_lo;
        if ((e_lo < 0.0) != (e_hi < 0.0)) {
            return bisect(E, s_lo, s_hi);
        }
        s_hi = s_lo;
        e_hi = e_lo;
    }
    return -1.0;
}

// Equation residuals, oriented so the nontrivial root is a sign change.
double family_equation(const OffspringLaw& law, int N, double s) {
    switch (law.family()) {
        case Family::geometric: {
            const double m = law.mean();
            return std::pow(s + 1.0 / m, static_cast<double>(N)) -
                   std::pow(s, static_cast<double>(N - 1));
        }
        case Family::fractional_linear: {
            const double p = law.param_p();
            const double b = law.param_b();
            return (1.0 - p * (1.0 - s)) -
                   std::pow(b / (1.0 - p), 1.0 / N) *
                       std::pow(p * s, 1.0 - 1.0 / N);
        }
        case Family::poisson:
            return poisson_cdf(N - 1, law.param_m() * s) - (1.0 - s);
        case Family::one_or_many: {
            const double p = law.param_p();
            const int r = law.param_r();
            return p * (1.0 - binomial_cdf(N - 1, r, s)) - s;
        }
        case Family::generic:
            break;
    }
    throw UnsupportedFamily("tau_family: no closed equation for generic laws");
}

} // namespace

FixedPointResult tau_iterate(const OffspringLaw& law, int N, double tol,
                             std::int64_t max_iter, bool keep_trajectory) {
    if (N < 1) throw DomainError("tau_iterate: N must be >= 1");
    FixedPointResult res;
    if (keep_trajectory) res.trajectory.push_back(1.0);

    double x = 0.0;  // x_n = 1 - tau_{N,n}, increasing to the smallest root
    std::int64_t it = 0;
    for (; it < max_iter; ++it) {
        const double x_next = phi_map(law, N, x);
        if (keep_trajectory) res.trajectory.push_back(1.0 - x_next);
        const double delta = std::abs(x_next - x);
        x = x_next;
        if (delta < tol) break;
    }
    if (it == max_iter) {
        throw NoConvergence("tau_iterate: max_iter reached before |delta| < tol");
    }
    res.iterations = it + 1;

    // Polish. F(x) = x - Phi(x) is <= 0 on the approach from below; probe to
    // the right for a sign change and bisect. At a tangency (criticality)
    // there is no bracket and the iterate stands.
    auto F = [&](double t) { return t - phi_map(law, N, t); };
    double lo = x;
    double step = tol > 1e-12 ? tol : 1e-12;
    double hi = lo;
    bool bracketed = false;
    while (hi < 1.0) {
        hi = hi + step < 1.0 ? hi + step : 1.0;
        if (F(hi) > 0.0) {
            bracketed = true;
            break;
        }
        step *= 4.0;
    }
    if (bracketed && F(lo) <= 0.0) {
        x = bisect(F, lo, hi);
    }

    res.tau = 1.0 - x;
    res.residual = std::abs(F(x));
    return res;
}

std::vector<double> tau_trajectory(const OffspringLaw& law, int N, int n) {
    if (N < 1) throw DomainError("tau_trajectory: N must be >= 1");
    if (n < 0) throw DomainError("tau_trajectory: n must be >= 0");
    std::vector<double> traj;
    traj.reserve(static_cast<std::size_t>(n) + 1);
    double x = 0.0;
    traj.push_back(1.0);
    for (int i = 0; i < n; ++i) {
        x = phi_map(law, N, x);
        traj.push_back(1.0 - x);
    }
    return traj;
}

FixedPointResult tau_family(const OffspringLaw& law, int N) {
    if (N < 1) throw DomainError("tau_family: N must be >= 1");
    FixedPointResult res;

    if (law.family() == Family::one_or_many && N == 1) {
        // p_0 = 0: the process never dies, tau_1 = 1. The binomial equation
        // below only applies for N >= 2.
        res.tau = 1.0;
        res.residual = std::abs(-g_eval(law, GBandQuery{1, 0, 1.0, 0.0}));
        return res;
    }

    auto E = [&](double s) { return family_equation(law, N, s); };
    const double root = largest_root(E, 1024);
    res.tau = root > 0.0 ? root : 0.0;
    res.residual =
        std::abs((1.0 - res.tau) - g_eval(law, GBandQuery{N, 0, res.tau, 1.0 - res.tau}));
    return res;
}

double critical_y(int N) {
    if (N < 2) throw DomainError("critical_y: N must be >= 2");
    auto E = [N](double y) {
        double fact = 1.0;  // j!
        double pow_y = 1.0; // y^j
        double s = 0.0;
        for (int j = 0; j < N; ++j) {
            if (j > 0) {
                fact *= j;
                pow_y *= y;
            }
            s += pow_y / fact;
        }
        // fact is now (N-1)!
        return pow_y * y / fact + s - std::exp(y);
    };
    // E > 0 just above 0, E < 0 once e^y dominates; single positive crossing.
    double lo = 1e-8;
    double hi = lo;
    while (E(hi) > 0.0) {
        hi *= 1.5;
        if (hi > 700.0) throw NoConvergence("critical_y: no sign change found");
    }
    if (hi == lo) throw NoConvergence("critical_y: residual negative at y ~ 0");
    return bisect(E, hi / 1.5, hi);
}

double cayley_tree(double z) {
    const double inv_e = std::exp(-1.0);
    if (!(z >= 0.0)) throw DomainError("cayley_tree: z must be >= 0");
    if (z > inv_e * (1.0 + 4e-16)) throw DomainError("cayley_tree: z must be <= 1/e");
    if (z == 0.0) return 0.0;
    double y = z;
    for (int it = 0; it < 100; ++it) {
        const double ze = z * std::exp(y);
        const double g = y - ze;
        const double dg = 1.0 - ze;
        if (std::abs(dg) < 1e-12) break;  // tangent point z ~ 1/e
        const double y_next = y - g / dg;
        if (!(y_next >= 0.0 && y_next <= 1.0)) break;
        if (std::abs(y_next - y) < 1e-15) return y_next;
        y = y_next;
    }
    // Fallback: g(0) = -z < 0 <= g(1) = 1 - z e.
    return bisect([z](double t) { return t - z * std::exp(t); }, 0.0, 1.0);
}

CriticalValue critical_mean(Family family, int N) {
    if (N < 1) throw DomainError("critical_mean: N must be >= 1");
    if (family != Family::poisson && family != Family::geometric) {
        throw UnsupportedFamily("critical_mean: only poisson and geometric are supported");
    }
    CriticalValue cv;
    cv.N = N;
    cv.family = family;
    if (N == 1) {
        cv.m_crit = 1.0;  // classical extinction criticality
        cv.tau_crit = 0.0;
        cv.y = 0.0;
        return cv;
    }
    if (family == Family::poisson) {
        const double y = critical_y(N);
        // m y^(N-1)/(N-1)! = e^y
        cv.y = y;
        cv.m_crit = std::exp(y + std::lgamma(static_cast<double>(N)) -
                             static_cast<double>(N - 1) * std::log(y));
        cv.tau_crit = y / cv.m_crit;
        return cv;
    }

    // Geometric: smallest m for which (tau + 1/m)^N = tau^(N-1) has a root in
    // (0,1]. E(tau; m) is positive at both ends and dips negative once m
    // crosses the critical mean; detect the dip on a grid with a refined
    // minimum, then bisect on m.
    auto equation_min = [N](double m, double& argmin) {
        auto E = [&](double t) {
            return std::pow(t + 1.0 / m, static_cast<double>(N)) -
                   std::pow(t, static_cast<double>(N - 1));
        };
        const int grid = 1024;
        double best = std::numeric_limits<double>::infinity();
        double best_t = 0.0;
        for (int i = 1; i < grid; ++i) {
            const double t = static_cast<double>(i) / grid;
            const double e = E(t);
            if (e < best) {
                best = e;
                best_t = t;
            }
        }
        // Golden-section refinement of the dip.
        double a = best_t - 1.0 / grid, b = best_t + 1.0 / grid;
        if (a < 0.0) a = 0.0;
        if (b > 1.0) b = 1.0;
        const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
        double c = b - gr * (b - a), d = a + gr * (b - a);
        double fc = E(c), fd = E(d);
        for (int it = 0; it < 120; ++it) {
            if (fc < fd) {
                b = d; d = c; fd = fc;
                c = b - gr * (b - a);
                fc = E(c);
            } else {
                a = c; c = d; fc = fd;
                d = a + gr * (b - a);
                fd = E(d);
            }
        }
        argmin = 0.5 * (a + b);
        const double refined = E(argmin);
        return refined < best ? refined : best;
    };

    const int m_grid = 10000;
    const double m_lo_all = 1.0;
    const double m_hi_all = 4.0 * N > 32.0 ? 4.0 * N : 32.0;
    double m_no = m_lo_all;
    double m_yes = -1.0;
    double dummy;
    for (int i = 1; i <= m_grid; ++i) {
        const double m = m_lo_all + (m_hi_all - m_lo_all) * i / m_grid;
        if (equation_min(m, dummy) <= 0.0) {
            m_yes = m;
            break;
        }
        m_no = m;
    }
    if (m_yes < 0.0) throw NoConvergence("critical_mean: no root up to m_hi");
    while (m_yes - m_no > 1e-7) {
        const double mid = 0.5 * (m_no + m_yes);
        if (equation_min(mid, dummy) <= 0.0) {
            m_yes = mid;
        } else {
            m_no = mid;
        }
    }
    cv.m_crit = 0.5 * (m_no + m_yes);
    equation_min(cv.m_crit, cv.tau_crit);
    cv.y = cv.m_crit * cv.tau_crit;
    return cv;
}

bool sufficient_condition(const OffspringLaw& law, int N) {
    if (N < 2) throw DomainError("sufficient_condition: N must be >= 2");
    const auto& pmf = law.coeffs();
    double below = 0.0;
    double weighted_tail = 0.0;
    for (std::size_t j = 0; j < pmf.size(); ++j) {
        if (j < static_cast<std::size_t>(N)) {
            below += pmf[j];
        } else {
            weighted_tail += pmf[j] / (static_cast<double>(j) + 1.0);
        }
    }
    const double lhs = 2.0 * N * weighted_tail;
    const double rhs = (1.0 - below) * (1.0 - below);
    return lhs <= rhs;
}

} // namespace narygw
