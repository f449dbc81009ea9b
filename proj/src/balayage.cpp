#include "riesz/balayage.hpp"

#include <cmath>

#include "riesz/quadrature.hpp"
#include "riesz/special_functions.hpp"

namespace riesz {

namespace {
constexpr double kPi = 3.14159265358979323846;

double omega_ws(const RieszKernel& k) { return surface_area(k.d()) * sphere_energy(k); }

double sin_half_alpha_pi(const RieszKernel& k) {
    if (k.newton_endpoint()) return 0.0;
    return std::sin(0.5 * kPi * k.alpha());
}

// Potential of omega_R at the axial point; same formula as
// ball_axis_potential but without the interior-range guard, since the mass
// formula remains valid at s = d-2 (the hypergeometric value stays finite and
// matches the surface-measure potential there).
double axis_potential_formula(const RieszKernel& k, double R, double h) {
    const double z = R * R / (h * h);
    return std::pow(h, -k.s()) * gauss_2f1(0.5 * k.s(), 0.5 * k.d(), 1.0 + 0.5 * k.s(), -z);
}

} // namespace

double plane_point_balayage_density(const RieszKernel& kernel, double h, double r) {
    if (!(h > 0.0)) throw DomainError("plane_point_balayage_density: height must be positive");
    if (!(r >= 0.0)) throw DomainError("plane_point_balayage_density: radius must be nonnegative");
    const double alpha = kernel.alpha();
    const double expo = kernel.d() - 0.5 * kernel.s(); // (2d - s)/2
    return std::pow(2.0 * h, alpha) /
           (omega_ws(kernel) * std::pow(r * r + h * h, expo));
}

double plane_config_density(const ChargeConfig& config, double r) {
    double density = 0.0;
    for (const auto& c : config.charges())
        density += c.gamma * plane_point_balayage_density(config.kernel(), c.height, r);
    return density;
}

double ball_balayage_mass(const RieszKernel& kernel, double R, double h) {
    kernel.require_full_mode("ball_balayage_mass");
    if (!(R > 0.0) || !(h > 0.0))
        throw DomainError("ball_balayage_mass: radius and height must be positive");
    return axis_potential_formula(kernel, R, h) / ball_energy(kernel, R);
}

double lambda_star(const RieszKernel& kernel, double R, double h) {
    kernel.require_full_mode("lambda_star");
    if (!(R > 0.0) || !(h > 0.0))
        throw DomainError("lambda_star: radius and height must be positive");
    const double alpha = kernel.alpha();
    const double sin_f = sin_half_alpha_pi(kernel);
    if (sin_f == 0.0) return 0.0;
    const double K1 = std::pow(2.0, alpha) * sin_f *
                      beta_value(0.5 * kernel.d(), 0.5 * alpha) / (kPi * omega_ws(kernel));
    return std::pow(h, alpha) * K1 / std::pow(R * R + h * h, 0.5 * kernel.d());
}

double ball_balayage_density(const RieszKernel& kernel, double R, double h, double r,
                             double rel_tol) {
    kernel.require_full_mode("ball_balayage_density");
    if (!(R > 0.0) || !(h > 0.0))
        throw DomainError("ball_balayage_density: radius and height must be positive");
    if (!(r >= 0.0 && r < R)) throw DomainError("ball_balayage_density: requires 0 <= r < R");
    const double alpha = kernel.alpha();
    const double expo = kernel.d() - 0.5 * kernel.s();
    const double pref = std::pow(2.0 * h, alpha) / omega_ws(kernel);
    const double plane_term = std::pow(r * r + h * h, -expo);
    const double sin_f = sin_half_alpha_pi(kernel);
    if (sin_f == 0.0) return pref * plane_term;

    const double B = R * R + h * h;
    const double A = (R - r) * (R + r);
    auto core = [B, A, expo](double v) {
        return std::pow(v + B, -expo) / (v + A);
    };
    const double I = integrate_halfline_weighted(0.5 * alpha, expo + 1.0, core, rel_tol, 1e-300);
    return pref * (plane_term + sin_f * I / (kPi * std::pow(A, 0.5 * alpha)));
}

double lambda_gap(const RieszKernel& kernel, double R, double h, double r, double rel_tol) {
    kernel.require_full_mode("lambda_gap");
    if (!(R > 0.0) || !(h > 0.0))
        throw DomainError("lambda_gap: radius and height must be positive");
    if (!(r >= 0.0 && r < R)) throw DomainError("lambda_gap: requires 0 <= r < R");
    const double alpha = kernel.alpha();
    const double expo = kernel.d() - 0.5 * kernel.s();
    const double A = (R - r) * (R + r);
    const double B = R * R + h * h;
    const double first = std::pow(A, 0.5 * alpha - 1.0) * std::pow(r * r + h * h, -expo);
    const double sin_f = sin_half_alpha_pi(kernel);
    double bracket = first;
    if (sin_f != 0.0) {
        auto core = [B, A, expo](double v) {
            return std::pow(v + B, -expo) / (v + A);
        };
        const double J =
            integrate_halfline_weighted(0.5 * alpha - 1.0, expo + 1.0, core, rel_tol, 1e-300);
        bracket -= sin_f * J / kPi;
    }
    const double gap = std::pow(2.0 * h, alpha) * A / omega_ws(kernel) * bracket;
    if (gap < -1e-12)
        throw NumericError("lambda_gap: computed gap is negative beyond tolerance", gap, 0.0);
    return std::max(gap, 0.0);
}

BallBalayage make_ball_balayage(const RieszKernel& kernel, double R, double h) {
    BallBalayage b{kernel, R, h, ball_balayage_mass(kernel, R, h), lambda_star(kernel, R, h)};
    if (!(b.mass > 0.0 && b.mass < 1.0))
        throw NumericError("ball balayage mass outside (0,1)", b.mass, 0.0);
    if (kernel.newton_endpoint()) {
        b.has_singular_boundary_part = true;
        IntegrationSpec spec;
        const int d = kernel.d();
        spec.integrand = [&kernel, h, d](double r) {
            return plane_point_balayage_density(kernel, h, r) * std::pow(r, d - 1);
        };
        spec.lower = 0.0;
        spec.upper = R;
        b.ac_mass = surface_area(d - 1) * integrate(spec).value;
        b.singular_boundary_mass = b.mass - b.ac_mass;
    }
    return b;
}

} // namespace riesz
