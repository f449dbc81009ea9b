#pragma once

#include <functional>
#include <limits>
#include <optional>

#include "riesz/errors.hpp"

namespace riesz {

/// One-dimensional definite integral with optional algebraic endpoint
/// singularities.  The upper limit may be +infinity, in which case the
/// interval is mapped to (0,1) by u = v/(1+v) before any adaptivity (no
/// finite truncation).  A declared exponent p in [0,1) states that the
/// integrand behaves like (t-lo)^{-p} (resp. (hi-t)^{-p}) at that end; the
/// substitution t = lo + w^{1/(1-p)} removes the singularity exactly.
struct IntegrationSpec {
    std::function<double(double)> integrand;
    double lower = 0.0;
    double upper = 0.0; // may be +infinity
    std::optional<double> singular_exponent_lower;
    std::optional<double> singular_exponent_upper;
    double rel_tol = 1e-10;
    double abs_tol = 1e-14;
    int max_panels = 4096;
};

struct IntegrationResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int panels_used = 0;
};

/// Adaptive Gauss-Kronrod (G7,K15) integration of the given spec.
/// Throws NumericError (carrying the best estimate and achieved error) if
/// the panel budget is exhausted before the tolerance
/// max(rel_tol*|value|, abs_tol) is met.
IntegrationResult integrate(const IntegrationSpec& spec);

/// Integral of u^power * core(u) over (0, +infinity).
///
/// `power` > -1 is the exact exponent of the algebraic factor at 0;
/// `tail_decay` declares the decay rate of core alone, core(u) = O(u^{-tail_decay}),
/// and must exceed 1 + power for convergence.  The weight is removed exactly
/// on (0,1) by a power substitution and the tail is mapped through u = 1/v
/// with a second substitution matched to the declared decay.
double integrate_halfline_weighted(double power, double tail_decay,
                                   const std::function<double(double)>& core,
                                   double rel_tol = 1e-10, double abs_tol = 1e-14);

} // namespace riesz
