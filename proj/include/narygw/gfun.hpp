#pragma once

// The band sum
//
//   G_N(x, y; j) = sum_{k=jN}^{jN+N-1} x^k f^(k)(y)/k!
//
// i.e. the j-th block of N consecutive terms of the Taylor expansion of f
// around y with increment x. When x + y <= 1 each band lies in [0,1] and the
// bands over all j partition f(1) = 1.

#include <cstdint>

#include "narygw/offspring.hpp"

namespace narygw {

struct GBandQuery {
    int N = 1;           // band width, >= 1
    std::int64_t j = 0;  // band index, >= 0; window is exactly jN .. jN+N-1
    double x = 0.0;      // in [0,1]
    double y = 0.0;      // in [0,1]
};

double g_eval(const OffspringLaw& law, const GBandQuery& q);

// d/dx G_N(1-x, x; 0) = N (1-x)^(N-1) T_N(x), the telescoped derivative of
// the fixed-point map. Nonnegative on [0,1].
double g0_slope(const OffspringLaw& law, int N, double x);

} // namespace narygw
