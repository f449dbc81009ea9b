#pragma once

#include <Eigen/Dense>
#include <functional>
#include <vector>

#include "riesz/errors.hpp"

namespace riesz {

/// Riesz kernel parameters on the hyperplanar conductor R^d embedded in
/// R^{d+1}: dimension d >= 2 and exponent s with d-2 <= s < d (full mode,
/// alpha = d-s in (0,2]).  The weaker range 0 < s < d-2 is allowed only via
/// weak_mode(); operations relying on the balayage inequality refuse it.
class RieszKernel {
public:
    RieszKernel(int d, double s);

    static RieszKernel weak_mode(int d, double s);

    int d() const { return d_; }
    double s() const { return s_; }
    double alpha() const { return static_cast<double>(d_) - s_; }
    bool weak() const { return weak_; }

    /// True at the Newton endpoint s = d-2 (alpha = 2), where several
    /// closed-form constants vanish.
    bool newton_endpoint() const;

    void require_full_mode(const char* op) const;
    void require_interior(const char* op) const; // full mode and s > d-2

private:
    RieszKernel(int d, double s, bool weak);
    int d_;
    double s_;
    bool weak_;
};

/// Point in the ambient space R^{d+1}, split into the R^d base coordinates
/// and the height above the conductor.
struct AmbientPoint {
    Eigen::VectorXd base;
    double height = 0.0;
};

/// External field source: point charges gamma_j at heights h_j > 0 above the
/// conductor.  Heights are stored as |y_{j,d+1}|; the field only depends on
/// h_j^2, so the side of the hyperplane is immaterial.
class ChargeConfig {
public:
    struct Charge {
        double gamma;
        double height;
    };

    ChargeConfig(RieszKernel kernel, std::vector<Charge> charges);

    const RieszKernel& kernel() const { return kernel_; }
    const std::vector<Charge>& charges() const { return charges_; }

    double total_charge() const;          // Gamma = sum gamma_j
    double height_moment() const;         // sum gamma_j h_j^alpha
    double strongest_attractor_height() const;

private:
    RieszKernel kernel_;
    std::vector<Charge> charges_;
};

/// Rotationally symmetric measure on R^d given by a radial Lebesgue density
/// f(r) on [0, outer_radius].  Carries sampled values plus an optional exact
/// evaluator; sampled-only profiles interpolate linearly.  The profile may
/// declare an algebraic edge exponent p (density ~ (R-r)^{-p} near the rim)
/// and, when outer_radius is infinite, the algebraic decay rate of the
/// density at infinity.
class RadialProfile {
public:
    RadialProfile(RieszKernel kernel, double outer_radius,
                  std::vector<double> radii, std::vector<double> values,
                  bool is_signed = false);

    /// Sample an analytic density at Chebyshev-distributed nodes clustered at
    /// the outer rim, keeping the exact evaluator.
    static RadialProfile from_function(RieszKernel kernel, double outer_radius,
                                       std::function<double(double)> density,
                                       int samples = 64, bool is_signed = false);

    const RieszKernel& kernel() const { return kernel_; }
    double outer_radius() const { return outer_radius_; }
    const std::vector<double>& radii() const { return radii_; }
    const std::vector<double>& values() const { return values_; }
    bool is_signed() const { return is_signed_; }
    bool has_analytic() const { return static_cast<bool>(analytic_); }

    double edge_exponent() const { return edge_exponent_; }
    void set_edge_exponent(double p);
    double tail_decay() const { return tail_decay_; }
    void set_tail_decay(double t) { tail_decay_ = t; }

    /// Density value at radius r (0 outside the support).
    double value(double r) const;

private:
    RieszKernel kernel_;
    double outer_radius_;
    std::vector<double> radii_;
    std::vector<double> values_;
    std::function<double(double)> analytic_;
    double edge_exponent_ = 0.0;
    double tail_decay_ = 0.0;
    bool is_signed_ = false;
};

/// Surface area of the n-dimensional unit sphere S^n in R^{n+1}:
/// omega_n = 2 pi^{(n+1)/2} / Gamma((n+1)/2).
double surface_area(int n);

/// Riesz s-energy W(S^d) of the unit sphere.
double sphere_energy(const RieszKernel& kernel);

/// Riesz s-energy of the closed ball B_R in R^d:
/// W(B_R) = s/(2 R^s) * B(s/2, alpha/2).
double ball_energy(const RieszKernel& kernel, double R);

/// Normalization constant c_R of the ball equilibrium density.
double ball_equilibrium_constant(const RieszKernel& kernel, double R);

/// Density of the ball equilibrium measure, c_R (R^2-r^2)^{-alpha/2}, for
/// d-2 < s < d and 0 <= r < R.
double ball_equilibrium_density(const RieszKernel& kernel, double R, double r);

/// Potential of the ball equilibrium measure at the axial point at the given
/// height above the center:
/// height^{-s} 2F1(s/2, d/2; 1+s/2; -R^2/height^2).
double ball_axis_potential(const RieszKernel& kernel, double R, double height);

/// External field Q(r) = sum_j gamma_j (r^2 + h_j^2)^{-s/2} on the conductor.
double external_field(const ChargeConfig& config, double r);

struct PotentialOptions {
    double rel_tol = 1e-9;
    double abs_tol = 1e-12;
};

/// Potential U^mu(x) at |x| = rho of the radial measure described by the
/// profile, via the polar-coordinate reduction
///   U(rho) = omega_{d-1} int_0^R f(r) r^{d-1} K(rho, r) dr,
/// where K is the normalized angular average of the Riesz kernel.  The
/// integrable diagonal singularity at r = rho is handled by splitting.
double radial_potential(const RadialProfile& profile, double rho,
                        const PotentialOptions& opts = {});

/// Normalized angular average of |x - t|^{-s} over directions of t, for
/// |x| = rho and |t| = r (exposed for tests).
double angular_kernel_average(const RieszKernel& kernel, double rho, double r,
                              double rel_tol = 1e-11);

/// Same average with the radial gap rho - r supplied exactly, so callers
/// integrating across the diagonal keep full relative precision there.
double angular_kernel_average_gap(const RieszKernel& kernel, double rho, double r, double gap,
                                  double rel_tol = 1e-11);

/// Kelvin transform of x with respect to the sphere centered at `center`
/// (height > 0) with radius sqrt(2 center.height):
/// x* = center + 2 center.height (x - center)/|x - center|^2.
AmbientPoint kelvin_map(const AmbientPoint& x, const AmbientPoint& center);

} // namespace riesz
