#pragma once

#include <optional>
#include <string>

#include "riesz/kernel_core.hpp"

namespace riesz {

/// Existence/compactness verdict for the weighted energy problem in a
/// discrete point-charge field.
enum class Verdict {
    AdmissibleCompact,          // total charge < -1: unique minimizer, compact support
    WeaklyAdmissibleCompact,    // total charge = -1, positive height moment
    WeaklyAdmissibleFullPlane,  // support is the whole conductor
    WeaklyAdmissibleUnknown,    // total charge = -1, moment test inconclusive
    NoSolution,                 // attraction too weak pointwise: no minimizer
    Indeterminate               // aggregate data cannot decide
};

const char* verdict_name(Verdict v);

/// Fixed one-to-one mapping from verdict to the criterion that justifies it.
const char* verdict_justification(Verdict v);

enum class PairCase {
    SupportOutsideBall, // (i): support contained in the complement of B_R
    SupportEverywhere,  // (ii): support is all of R^d, mu_Q equals the signed density
    SupportInsideBall   // (iii): support contained in B_R
};

const char* pair_case_name(PairCase c);

struct ClassificationReport {
    Verdict verdict;
    std::string justification;
    std::optional<double> total_charge;
    std::optional<double> moment;          // sum gamma_j h_j^alpha
    std::optional<PairCase> pair_case;
    std::optional<double> radius;          // R of the proven inclusion, cases (i)/(iii)
    std::optional<double> threshold_lower; // g^{1/d}
    std::optional<double> threshold_upper; // g^{-1/alpha}
    bool boundary_case = false;            // a comparison fell inside the tolerance band
};

/// Classify a discrete charge configuration by total charge and height
/// moment.  Comparisons against the critical values use a 1e-12 relative
/// band; verdicts decided inside the band carry the boundary annotation.
ClassificationReport classify_config(const ChargeConfig& config);

struct PairThresholds {
    double g;     // gamma/(1+gamma) in (0,1)
    double lower; // g^{1/d} < 1
    double upper; // g^{-1/alpha} > 1
};

/// Thresholds splitting the attractor-repellent pair (-1-gamma at h1,
/// +gamma at h2) by the height ratio q = h2/h1.
PairThresholds pair_thresholds(const RieszKernel& kernel, double gamma);

/// Radius of the ball where the signed-equilibrium density changes sign:
///   rho = [g q^alpha]^{2/(2d-s)},  R = sqrt((rho h1^2 - h2^2)/(1 - rho)).
/// Defined in cases (i) and (iii); exactly 0 at q = g^{1/d}.
double pair_exclusion_radius(const RieszKernel& kernel, double gamma, double h1, double h2);

/// Classify the attractor-repellent pair into the three support cases and
/// attach the inclusion radius where one is proven.  Only the inclusion is
/// reported; the exact support shape in cases (i)/(iii) is conjectural and
/// left to empirical runs.
ClassificationReport classify_pair(const RieszKernel& kernel, double gamma, double h1, double h2);

/// Density of the signed equilibrium measure on R^d for the pair field:
///   2^alpha/(omega_d W(S^d)) [ (1+gamma) h1^alpha (r^2+h1^2)^{-(2d-s)/2}
///                              - gamma h2^alpha (r^2+h2^2)^{-(2d-s)/2} ].
double pair_signed_density(const RieszKernel& kernel, double gamma, double h1, double h2,
                           double r);

/// Coefficient of r^{-(2d-s)} in the large-r expansion of the pair signed
/// density; negative exactly in case (iii).
double pair_tail_coefficient(const RieszKernel& kernel, double gamma, double h1, double h2);

} // namespace riesz
