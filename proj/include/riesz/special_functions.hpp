#pragma once

#include "riesz/errors.hpp"

namespace riesz {

/// Natural log of the Gamma function for x > 0.
double log_gamma(double x);

/// Gamma(x) for x > 0. Relative accuracy better than 1e-12 over the
/// argument ranges used here (x up to a few hundred).
double gamma_value(double x);

/// Beta function B(a,b) = Gamma(a)Gamma(b)/Gamma(a+b), a,b > 0.
/// Evaluated through log-Gamma differences so large parameters do not
/// overflow intermediate Gamma values.
double beta_value(double a, double b);

/// Parameter block for the Gauss hypergeometric function 2F1(a,b;c;x).
/// Evaluation is restricted to x <= 0; c must not be zero or a negative
/// integer.
struct HypergeometricArgs {
    double a;
    double b;
    double c;
    double x;
};

/// Gauss hypergeometric function 2F1(a,b;c;x) for x <= 0.
///
/// |x| < 1/2 sums the defining series directly.  Otherwise the Pfaff
/// transformation 2F1(a,b;c;x) = (1-x)^{-a} 2F1(a,c-b;c;x/(x-1)) maps the
/// argument into [1/2,1), where every term of the transformed series is
/// positive-stable.  For very large |x| the Pfaff series may need more than
/// the 10,000-term cap; when c-a = 1 (the only shape arising here) a
/// convergent large-argument expansion takes over.  Throws NumericError if
/// no route converges.
double gauss_2f1(const HypergeometricArgs& args);

inline double gauss_2f1(double a, double b, double c, double x) {
    return gauss_2f1(HypergeometricArgs{a, b, c, x});
}

} // namespace riesz
