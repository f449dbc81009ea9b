#pragma once

#include <cmath>
#include <functional>

#include "riesz/errors.hpp"

namespace riesz::detail {

// Brent's method on a sign-changing bracket [a,b]; stops when the bracket
// width falls below rel_tol * |root| (plus a tiny absolute floor).
inline double brent_root(const std::function<double(double)>& f, double a, double b,
                         double fa, double fb, double rel_tol) {
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if (fa * fb > 0.0) throw NumericError("brent_root: bracket does not straddle a root");
    double c = a, fc = fa, d = b - a, e = d;
    for (int iter = 0; iter < 200; ++iter) {
        if (std::abs(fc) < std::abs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double tol = 2.0 * rel_tol * std::abs(b) + 1e-300;
        const double m = 0.5 * (c - b);
        if (std::abs(m) <= tol || fb == 0.0) return b;
        if (std::abs(e) < tol || std::abs(fa) <= std::abs(fb)) {
            d = e = m; // bisection
        } else {
            double p, q;
            const double s = fb / fa;
            if (a == c) { // secant
                p = 2.0 * m * s;
                q = 1.0 - s;
            } else { // inverse quadratic
                const double qq = fa / fc, r = fb / fc;
                p = s * (2.0 * m * qq * (qq - r) - (b - a) * (r - 1.0));
                q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q; else p = -p;
            if (2.0 * p < std::min(3.0 * m * q - std::abs(tol * q), std::abs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = e = m;
            }
        }
        a = b;
        fa = fb;
        b += (std::abs(d) > tol) ? d : (m > 0.0 ? tol : -tol);
        fb = f(b);
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            e = d = b - a;
        }
    }
    return b;
}

} // namespace riesz::detail
