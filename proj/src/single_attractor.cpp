#include "riesz/single_attractor.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "riesz/balayage.hpp"
#include "riesz/detail/root_find.hpp"
#include "riesz/quadrature.hpp"
#include "riesz/special_functions.hpp"

namespace riesz {

namespace {
constexpr double kPi = 3.14159265358979323846;

double omega_ws(const RieszKernel& k) { return surface_area(k.d()) * sphere_energy(k); }

void require_attractor(double gamma, const char* op) {
    if (!(gamma < -1.0))
        throw DomainError(std::string(op) + ": attractor charge must satisfy gamma < -1");
}

} // namespace

double solve_radius(const RieszKernel& kernel, double gamma, double h) {
    kernel.require_full_mode("solve_radius");
    require_attractor(gamma, "solve_radius");
    if (!(h > 0.0)) throw DomainError("solve_radius: height must be positive");

    const double d = kernel.d(), s = kernel.s(), alpha = kernel.alpha();
    const double sup = std::exp(log_gamma(0.5 * alpha) + log_gamma(2.0 + 0.5 * s) -
                                log_gamma(1.0 + 0.5 * d));
    const double rhs = -sup / gamma;
    if (!(rhs < sup))
        throw NumericError("solve_radius: right-hand side exceeds the supremum of the "
                           "monotone left-hand side", rhs, 0.0);

    auto lhs = [&](double z) {
        return std::pow(z, 0.5 * s + 1.0) *
               gauss_2f1(1.0 + 0.5 * s, 1.0 + 0.5 * d, 2.0 + 0.5 * s, -z);
    };
    double z_hi = 1.0, f_hi = lhs(z_hi) - rhs;
    double z_lo = 1e-12, f_lo = lhs(z_lo) - rhs;
    int guard = 0;
    while (f_hi < 0.0) {
        z_lo = z_hi;
        f_lo = f_hi;
        z_hi *= 4.0;
        f_hi = lhs(z_hi) - rhs;
        if (++guard > 200)
            throw NumericError("solve_radius: failed to bracket the support radius", z_hi, 0.0);
    }
    while (f_lo > 0.0) {
        z_hi = z_lo;
        f_hi = f_lo;
        z_lo /= 4.0;
        f_lo = lhs(z_lo) - rhs;
        if (++guard > 400)
            throw NumericError("solve_radius: failed to bracket the support radius", z_lo, 0.0);
    }
    const double z = detail::brent_root([&](double v) { return lhs(v) - rhs; }, z_lo, z_hi,
                                        f_lo, f_hi, 1e-10);
    return h * std::sqrt(z);
}

double solve_radius_newton(int d, double gamma, double h) {
    if (d < 3) throw DomainError("solve_radius_newton: requires d >= 3");
    require_attractor(gamma, "solve_radius_newton");
    if (!(h > 0.0)) throw DomainError("solve_radius_newton: height must be positive");
    const double s = d - 2.0;
    // -gamma s R^d (R^2+h^2)^{-1-s/2} is strictly increasing in R, so the
    // smallest root of (..) = d-2 is the only one.
    auto f = [=](double R) {
        return -gamma * s * std::pow(R, d) * std::pow(R * R + h * h, -1.0 - 0.5 * s) - (d - 2.0);
    };
    double lo = 1e-12 * h, hi = h;
    double f_lo = f(lo), f_hi = f(hi);
    int guard = 0;
    while (f_hi < 0.0) {
        lo = hi;
        f_lo = f_hi;
        hi *= 4.0;
        f_hi = f(hi);
        if (++guard > 200)
            throw NumericError("solve_radius_newton: failed to bracket", hi, 0.0);
    }
    return detail::brent_root(f, lo, hi, f_lo, f_hi, 1e-12);
}

double equilibrium_density(const RieszKernel& kernel, double gamma, double h, double R0,
                           double r, double rel_tol) {
    kernel.require_full_mode("equilibrium_density");
    require_attractor(gamma, "equilibrium_density");
    if (!(r >= 0.0 && r <= R0)) throw DomainError("equilibrium_density: requires 0 <= r <= R0");

    const double alpha = kernel.alpha();
    const double expo = kernel.d() - 0.5 * kernel.s();
    const double pref = -gamma * std::pow(2.0 * h, alpha) / omega_ws(kernel);
    const double plane_term = std::pow(r * r + h * h, -expo);
    if (kernel.newton_endpoint()) return pref * plane_term;
    if (r == R0) return 0.0;

    const double A = (R0 - r) * (R0 + r);
    const double B = R0 * R0 + h * h;
    auto core = [A, B, expo](double u) {
        return std::pow(A * u + B, -expo) / (u + 1.0);
    };
    const double J = integrate_halfline_weighted(0.5 * alpha - 1.0, 1.0 + expo, core,
                                                 rel_tol, 1e-300);
    const double sin_f = std::sin(0.5 * kPi * alpha);
    return pref * (plane_term - sin_f / kPi * J);
}

double SignedBallEquilibrium::density(double r) const {
    return -gamma * ball_balayage_density(kernel, R, h, r) +
           rim_weight * ball_equilibrium_density(kernel, R, r);
}

SignedBallEquilibrium signed_ball_equilibrium(const RieszKernel& kernel, double gamma, double h,
                                              double R) {
    kernel.require_interior("signed_ball_equilibrium");
    if (!(R > 0.0) || !(h > 0.0))
        throw DomainError("signed_ball_equilibrium: radius and height must be positive");
    const double m = ball_balayage_mass(kernel, R, h);
    const double rim = 1.0 + gamma * m;
    return SignedBallEquilibrium{kernel, gamma, h, R, m, rim, rim * ball_energy(kernel, R)};
}

double boundary_coefficient_H(const RieszKernel& kernel, double gamma, double h, double R) {
    kernel.require_interior("boundary_coefficient_H");
    require_attractor(gamma, "boundary_coefficient_H");
    const double m = ball_balayage_mass(kernel, R, h);
    return -gamma * lambda_star(kernel, R, h) +
           (1.0 + gamma * m) * ball_equilibrium_constant(kernel, R);
}

EquilibriumSolution solve_equilibrium(const RieszKernel& kernel, double gamma, double h,
                                      const SolveOptions& opts) {
    kernel.require_full_mode("solve_equilibrium");
    if (!(h > 0.0)) throw DomainError("solve_equilibrium: height must be positive");
    if (!(gamma <= -1.0))
        throw DomainError("solve_equilibrium: requires gamma <= -1 (weaker fields admit no "
                          "compactly determined solution here)");

    const int d = kernel.d();
    const double s = kernel.s();

    if (gamma == -1.0) {
        // Degenerate full-plane case: mu_Q is the plane balayage of delta_y.
        auto density_fn = [kernel, h](double r) {
            return plane_point_balayage_density(kernel, h, r);
        };
        RadialProfile profile = RadialProfile::from_function(
            kernel, std::numeric_limits<double>::infinity(), density_fn, opts.profile_samples);
        profile.set_tail_decay(2.0 * d - s);
        // unit mass of the swept charge, checked numerically
        auto core = [&](double r) { return density_fn(r) * std::pow(r, d - 1); };
        const double mass =
            surface_area(d - 1) *
            integrate_halfline_weighted(0.0, (2.0 * d - s) - (d - 1), core, 1e-10, 1e-14);
        return EquilibriumSolution{kernel, gamma, h,
                                   std::numeric_limits<double>::infinity(), profile, 0.0, mass};
    }

    const double R0 = solve_radius(kernel, gamma, h);
    auto density_fn = [kernel, gamma, h, R0, tol = opts.density_rel_tol](double r) {
        return equilibrium_density(kernel, gamma, h, R0, r, tol);
    };
    RadialProfile profile =
        RadialProfile::from_function(kernel, R0, density_fn, opts.profile_samples);

    IntegrationSpec spec;
    spec.integrand = [&density_fn, d](double r) { return density_fn(r) * std::pow(r, d - 1); };
    spec.lower = 0.0;
    spec.upper = R0;
    spec.rel_tol = 1e-9;
    spec.abs_tol = 1e-12;
    const double mass = surface_area(d - 1) * integrate(spec).value;

    EquilibriumSolution solution{kernel, gamma, h, R0, profile, 0.0, mass};
    solution.robin_constant = robin_constant(solution, opts.potential);
    return solution;
}

double robin_constant(const EquilibriumSolution& solution, const PotentialOptions& opts) {
    const double u0 = radial_potential(solution.density, 0.0, opts);
    const double q0 = solution.gamma * std::pow(solution.h, -solution.kernel.s());
    return u0 + q0;
}

FrostmanReport verify_frostman(const EquilibriumSolution& solution, const ChargeConfig& config,
                               int interior_samples, int exterior_samples, double tol_equality,
                               double tol_inequality, const PotentialOptions& opts) {
    if (interior_samples < 1) throw DomainError("verify_frostman: need interior samples");
    const double F = solution.robin_constant;
    if (tol_equality < 0.0) tol_equality = 1e-4 * std::max(std::abs(F), 1.0);

    FrostmanReport report{};
    report.robin = F;
    report.tol_equality = tol_equality;
    report.tol_inequality = tol_inequality;
    report.max_interior_deviation = 0.0;
    report.min_exterior_slack = std::numeric_limits<double>::infinity();

    const bool full_plane = solution.full_plane();
    const double R0 = full_plane ? 10.0 * solution.h : solution.support_radius;

    // interior: Chebyshev nodes on [0, R0 (1 - 1e-3)], avoiding the exact rim
    const double r_max = full_plane ? R0 : R0 * (1.0 - 1e-3);
    for (int k = 0; k < interior_samples; ++k) {
        const double t =
            interior_samples == 1 ? 0.0 : std::cos(kPi * k / (interior_samples - 1.0));
        const double r = 0.5 * r_max * (1.0 - t);
        const double v = radial_potential(solution.density, r, opts) + external_field(config, r);
        report.interior_radii.push_back(r);
        report.interior_values.push_back(v);
        report.max_interior_deviation = std::max(report.max_interior_deviation, std::abs(v - F));
    }

    if (!full_plane) {
        static const double kExteriorFactors[5] = {1.01, 1.1, 2.0, 5.0, 10.0};
        for (int k = 0; k < exterior_samples; ++k) {
            double factor;
            if (exterior_samples <= 5) {
                factor = kExteriorFactors[k];
            } else {
                factor = 1.01 * std::pow(10.0 / 1.01, k / (exterior_samples - 1.0));
            }
            const double r = R0 * factor;
            const double v =
                radial_potential(solution.density, r, opts) + external_field(config, r);
            report.exterior_radii.push_back(r);
            report.exterior_values.push_back(v);
            report.min_exterior_slack = std::min(report.min_exterior_slack, v - F);
        }
    }
    if (report.exterior_radii.empty()) report.min_exterior_slack = 0.0;
    return report;
}

} // namespace riesz
