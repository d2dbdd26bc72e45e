#ifndef CTP_LAMBERTW_HPP
#define CTP_LAMBERTW_HPP

#include <cmath>
#include <string>

#include "ctp/error.hpp"
#include "ctp/rational.hpp"

namespace ctp {

// Principal branch of the Lambert W function on x >= 0, solved by damped
// Halley iteration to |w e^w - x| <= 1e-12 * max(1, x).
inline double lambertW(double x) {
    if (!(x >= 0)) fail(ErrorCode::UsageError, "lambertW needs x >= 0");
    if (x == 0) return 0.0;
    double w = std::log1p(x);  // decent seed on the nonnegative axis
    double tol = 1e-12 * std::max(1.0, x);
    for (int iter = 0; iter < 200; ++iter) {
        double ew = std::exp(w);
        double f = w * ew - x;
        if (std::fabs(f) <= tol) return w;
        double wp1 = w + 1.0;
        double denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
        double step = f / denom;
        if (std::fabs(step) > 1.0) step = step > 0 ? 1.0 : -1.0;  // damping
        w -= step;
        if (w < 0) w = 0;
    }
    fail(ErrorCode::NonConvergence, "lambertW(" + std::to_string(x) + ")");
}

// Competitive-ratio lower-bound growth term g(k) = e^{W(ln k / 2)} - 1.
inline double gOfK(double k) {
    if (!(k >= 1)) fail(ErrorCode::UsageError, "gOfK needs k >= 1");
    return std::exp(lambertW(std::log(k) / 2.0)) - 1.0;
}

// Largest i >= 1 with ((i+1)!)^2 <= k (exact integer arithmetic).
inline int maxIForK(const Int& k) {
    if (k < 4) fail(ErrorCode::TooSmall, "need k >= 4");
    int i = 0;
    Int fact = 1;  // (i+1)! for current i
    for (;;) {
        Int nextFact = fact * Int(i + 2);  // (i+2)!
        if (nextFact * nextFact > k) break;
        fact = nextFact;
        ++i;
    }
    return i;
}

}  // namespace ctp

#endif  // CTP_LAMBERTW_HPP
