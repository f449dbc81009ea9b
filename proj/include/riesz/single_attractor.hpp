#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "riesz/kernel_core.hpp"

namespace riesz {

/// Support radius R_0 of the equilibrium measure for a single attractor of
/// charge gamma < -1 at height h.  Solves the monotone scalar equation
///   z^{s/2+1} 2F1(1+s/2, 1+d/2; 2+s/2; -z) = -Gamma(alpha/2)Gamma(2+s/2) / (gamma Gamma(1+d/2))
/// by bracketing and returns h*sqrt(z); valid for d-2 <= s < d.
double solve_radius(const RieszKernel& kernel, double gamma, double h);

/// Newton-case route (s = d-2, d >= 3): smallest R > 0 with
///   -gamma s R^d (R^2+h^2)^{-1-s/2} = d-2.
/// Agrees with solve_radius at the endpoint.
double solve_radius_newton(int d, double gamma, double h);

/// Equilibrium density at radius r in [0, R0]:
///   -gamma (2h)^alpha / (W(S^d) omega_d) [ (r^2+h^2)^{-(2d-s)/2} - sin(alpha pi/2)/pi J(r) ]
/// with J(r) the weighted half-line integral of the kernel construction.
/// Vanishes at r = R0 for s > d-2; at s = d-2 it is the plane-balayage
/// restriction (positive at the rim).
double equilibrium_density(const RieszKernel& kernel, double gamma, double h, double R0,
                           double r, double rel_tol = 1e-10);

/// Signed equilibrium measure of the ball B_R in the single-attractor field:
/// eta = -gamma Bal(delta_y, B_R) + (1 + gamma m_R) omega_R, total mass 1.
struct SignedBallEquilibrium {
    RieszKernel kernel;
    double gamma;
    double h;
    double R;
    double balayage_mass;         // m_R
    double rim_weight;            // 1 + gamma m_R, sign of the omega_R part
    double equilibrium_constant;  // C_{Q,R} = (1 + gamma m_R) W(B_R)

    double density(double r) const;
};

SignedBallEquilibrium signed_ball_equilibrium(const RieszKernel& kernel, double gamma, double h,
                                              double R);

/// Boundary coefficient H(R) = -gamma Lambda*_R + (1 + gamma m_R) c_R of the
/// signed ball equilibrium; its largest zero is the support radius R_0.
/// Unsupported at s = d-2 where H vanishes identically.
double boundary_coefficient_H(const RieszKernel& kernel, double gamma, double h, double R);

/// Solved single-attractor problem.  `support_radius` is +infinity in the
/// degenerate gamma = -1 case, where the equilibrium measure is the plane
/// balayage of the point charge and the support is all of R^d.
struct EquilibriumSolution {
    RieszKernel kernel;
    double gamma;
    double h;
    double support_radius;
    RadialProfile density;
    double robin_constant;
    double mass_check;

    bool full_plane() const { return std::isinf(support_radius); }
};

struct SolveOptions {
    double density_rel_tol = 1e-10;
    int profile_samples = 64;
    PotentialOptions potential;
};

EquilibriumSolution solve_equilibrium(const RieszKernel& kernel, double gamma, double h,
                                      const SolveOptions& opts = {});

/// Robin constant F_Q = U^{mu_Q}(0) + Q(0), with the potential evaluated by
/// radial quadrature at the origin.
double robin_constant(const EquilibriumSolution& solution,
                      const PotentialOptions& opts = {});

/// Numeric check of the variational inequalities: the weighted potential
/// U^{mu}+Q must equal F_Q on the support and dominate it outside.
struct FrostmanReport {
    double robin;
    double max_interior_deviation; // max |U + Q - F| over interior samples
    double min_exterior_slack;     // min (U + Q - F) over exterior samples
    std::vector<double> interior_radii;
    std::vector<double> interior_values; // U + Q at the samples
    std::vector<double> exterior_radii;
    std::vector<double> exterior_values;
    double tol_equality;
    double tol_inequality;

    bool passed() const {
        return max_interior_deviation <= tol_equality && min_exterior_slack >= -tol_inequality;
    }
};

FrostmanReport verify_frostman(const EquilibriumSolution& solution, const ChargeConfig& config,
                               int interior_samples, int exterior_samples,
                               double tol_equality = -1.0, double tol_inequality = 1e-6,
                               const PotentialOptions& opts = {});

} // namespace riesz
