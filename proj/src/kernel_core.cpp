#include "riesz/kernel_core.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "riesz/quadrature.hpp"
#include "riesz/special_functions.hpp"

namespace riesz {

namespace {
constexpr double kPi = 3.14159265358979323846;
constexpr double kEndpointBand = 1e-12;
} // namespace

RieszKernel::RieszKernel(int d, double s, bool weak) : d_(d), s_(s), weak_(weak) {}

RieszKernel::RieszKernel(int d, double s) : d_(d), s_(s), weak_(false) {
    if (d < 2) throw DomainError("RieszKernel: dimension d must be >= 2");
    if (!(s > 0.0 && s < d)) throw DomainError("RieszKernel: s must lie in (0, d)");
    if (s < d - 2 - kEndpointBand)
        throw DomainError("RieszKernel: s < d-2 requires weak_mode construction");
}

RieszKernel RieszKernel::weak_mode(int d, double s) {
    if (d < 2) throw DomainError("RieszKernel: dimension d must be >= 2");
    if (!(s > 0.0 && s < d)) throw DomainError("RieszKernel: s must lie in (0, d)");
    return RieszKernel(d, s, s < d - 2 - kEndpointBand);
}

bool RieszKernel::newton_endpoint() const {
    return std::abs(s_ - (d_ - 2)) <= kEndpointBand;
}

void RieszKernel::require_full_mode(const char* op) const {
    if (weak_)
        throw DomainError(std::string(op) + ": requires d-2 <= s < d (kernel is in weak mode)");
}

void RieszKernel::require_interior(const char* op) const {
    require_full_mode(op);
    if (newton_endpoint())
        throw UnsupportedEndpointError(
            std::string(op) +
            ": unsupported at s = d-2, where the ball equilibrium measure degenerates to a "
            "surface measure and the closed-form constant vanishes");
}

ChargeConfig::ChargeConfig(RieszKernel kernel, std::vector<Charge> charges)
    : kernel_(kernel), charges_(std::move(charges)) {
    if (charges_.empty()) throw DomainError("ChargeConfig: charge list must be non-empty");
    for (auto& c : charges_) {
        if (c.height == 0.0 || !std::isfinite(c.height) || !std::isfinite(c.gamma))
            throw DomainError("ChargeConfig: heights must be nonzero and finite");
        c.height = std::abs(c.height);
    }
}

double ChargeConfig::total_charge() const {
    double g = 0.0;
    for (const auto& c : charges_) g += c.gamma;
    return g;
}

double ChargeConfig::height_moment() const {
    double m = 0.0;
    for (const auto& c : charges_) m += c.gamma * std::pow(c.height, kernel_.alpha());
    return m;
}

double ChargeConfig::strongest_attractor_height() const {
    double best_gamma = charges_.front().gamma;
    double h = charges_.front().height;
    for (const auto& c : charges_) {
        if (c.gamma < best_gamma) {
            best_gamma = c.gamma;
            h = c.height;
        }
    }
    return h;
}

RadialProfile::RadialProfile(RieszKernel kernel, double outer_radius,
                             std::vector<double> radii, std::vector<double> values,
                             bool is_signed)
    : kernel_(kernel),
      outer_radius_(outer_radius),
      radii_(std::move(radii)),
      values_(std::move(values)),
      is_signed_(is_signed) {
    if (!(outer_radius_ > 0.0)) throw DomainError("RadialProfile: outer radius must be positive");
    if (radii_.size() != values_.size() || radii_.empty())
        throw DomainError("RadialProfile: sample arrays must be non-empty and equal length");
    for (std::size_t i = 0; i < radii_.size(); ++i) {
        if (i > 0 && !(radii_[i] > radii_[i - 1]))
            throw DomainError("RadialProfile: radii must be strictly increasing");
        if (!std::isfinite(values_[i]) || (!is_signed_ && values_[i] < 0.0))
            throw DomainError("RadialProfile: density values must be finite (and >= 0 unless signed)");
    }
    if (radii_.front() < 0.0 || (!std::isinf(outer_radius_) && radii_.back() > outer_radius_))
        throw DomainError("RadialProfile: radii must lie in [0, outer_radius]");
}

RadialProfile RadialProfile::from_function(RieszKernel kernel, double outer_radius,
                                           std::function<double(double)> density, int samples,
                                           bool is_signed) {
    if (samples < 2) throw DomainError("RadialProfile: need at least 2 samples");
    std::vector<double> radii(samples), values(samples);
    const bool finite = !std::isinf(outer_radius);
    const double span = finite ? outer_radius : 1.0;
    for (int k = 0; k < samples; ++k) {
        // sin spacing clusters nodes at the rim, where densities behave like
        // (R^2 - r^2)^{+-alpha/2}
        double t = std::sin(0.5 * kPi * k / (samples - 1.0));
        double r = span * (finite ? t : std::tan(0.5 * kPi * t * 0.999));
        if (k == samples - 1 && finite) r = outer_radius * (1.0 - 1e-9);
        radii[k] = r;
        values[k] = density(r);
    }
    RadialProfile profile(kernel, outer_radius, std::move(radii), std::move(values), is_signed);
    profile.analytic_ = std::move(density);
    return profile;
}

void RadialProfile::set_edge_exponent(double p) {
    if (!(p >= 0.0 && p < 1.0)) throw DomainError("RadialProfile: edge exponent must be in [0,1)");
    edge_exponent_ = p;
}

double RadialProfile::value(double r) const {
    if (r < 0.0) throw DomainError("RadialProfile: negative radius");
    if (analytic_) return r <= outer_radius_ ? analytic_(r) : 0.0;
    if (r > radii_.back() || r < radii_.front()) return 0.0;
    auto it = std::upper_bound(radii_.begin(), radii_.end(), r);
    if (it == radii_.begin()) return values_.front();
    std::size_t hi = static_cast<std::size_t>(it - radii_.begin());
    if (hi >= radii_.size()) return values_.back();
    std::size_t lo = hi - 1;
    double t = (r - radii_[lo]) / (radii_[hi] - radii_[lo]);
    return values_[lo] + t * (values_[hi] - values_[lo]);
}

double surface_area(int n) {
    if (n < 1) throw DomainError("surface_area: dimension must be >= 1");
    return 2.0 * std::pow(kPi, 0.5 * (n + 1)) / gamma_value(0.5 * (n + 1));
}

double sphere_energy(const RieszKernel& kernel) {
    const int d = kernel.d();
    const double s = kernel.s();
    if (d == 2) return std::pow(2.0, 1.0 - s) / (2.0 - s);
    return std::exp(log_gamma(0.5 * (d + 1)) + log_gamma(kernel.alpha()) -
                    log_gamma(0.5 * (kernel.alpha() + 1)) - log_gamma(d - 0.5 * s));
}

double ball_energy(const RieszKernel& kernel, double R) {
    kernel.require_full_mode("ball_energy");
    if (!(R > 0.0)) throw DomainError("ball_energy: radius must be positive");
    const double s = kernel.s();
    return 0.5 * s * std::pow(R, -s) * beta_value(0.5 * s, 0.5 * kernel.alpha());
}

double ball_equilibrium_constant(const RieszKernel& kernel, double R) {
    kernel.require_interior("ball_equilibrium_constant");
    if (!(R > 0.0)) throw DomainError("ball_equilibrium_constant: radius must be positive");
    const double d = kernel.d(), s = kernel.s(), alpha = kernel.alpha();
    return std::pow(kPi, -0.5 * d) * gamma_value(1.0 + 0.5 * s) /
           (std::pow(R, s) * gamma_value(1.0 - 0.5 * alpha));
}

double ball_equilibrium_density(const RieszKernel& kernel, double R, double r) {
    const double cR = ball_equilibrium_constant(kernel, R);
    if (!(r >= 0.0 && r < R)) throw DomainError("ball_equilibrium_density: requires 0 <= r < R");
    return cR * std::pow((R - r) * (R + r), -0.5 * kernel.alpha());
}

double ball_axis_potential(const RieszKernel& kernel, double R, double height) {
    kernel.require_interior("ball_axis_potential");
    if (!(R > 0.0) || !(height > 0.0))
        throw DomainError("ball_axis_potential: radius and height must be positive");
    const double s = kernel.s(), d = kernel.d();
    const double z = R * R / (height * height);
    return std::pow(height, -s) * gauss_2f1(0.5 * s, 0.5 * d, 1.0 + 0.5 * s, -z);
}

double external_field(const ChargeConfig& config, double r) {
    if (!(r >= 0.0)) throw DomainError("external_field: radius must be nonnegative");
    const double s = config.kernel().s();
    double q = 0.0;
    for (const auto& c : config.charges())
        q += c.gamma * std::pow(r * r + c.height * c.height, -0.5 * s);
    return q;
}

double angular_kernel_average(const RieszKernel& kernel, double rho, double r, double rel_tol) {
    return angular_kernel_average_gap(kernel, rho, r, rho - r, rel_tol);
}

double angular_kernel_average_gap(const RieszKernel& kernel, double rho, double r, double gap,
                                  double rel_tol) {
    const int d = kernel.d();
    const double s = kernel.s();
    if (rho == 0.0 || r == 0.0) return std::pow(std::max(rho, r), -s);
    const double B = 2.0 * rho * r;
    if (d == 3) {
        if (s == 2.0) return std::log((rho + r) / std::abs(gap)) / B;
        return (std::pow(rho + r, 2.0 - s) - std::pow(std::abs(gap), 2.0 - s)) /
               (B * (2.0 - s));
    }
    // Generic dimension, written in the distance variable delta = 1 - u so the
    // near-diagonal boundary layer at delta ~ gap^2/B keeps full relative
    // precision:
    //   int_0^2 delta^e (2-delta)^e (gap^2 + B delta)^{-s/2} d delta,
    // e = (d-3)/2.
    IntegrationSpec spec;
    const double expo = 0.5 * (d - 3);
    const double gap2 = gap * gap;
    spec.integrand = [gap2, B, s, expo](double delta) {
        return std::pow(delta * (2.0 - delta), expo) * std::pow(gap2 + B * delta, -0.5 * s);
    };
    spec.lower = 0.0;
    spec.upper = 2.0;
    if (d == 2) {
        spec.singular_exponent_lower = 0.5;
        spec.singular_exponent_upper = 0.5;
    }
    spec.rel_tol = rel_tol;
    spec.abs_tol = 1e-14;
    const double norm =
        std::sqrt(kPi) * std::exp(log_gamma(0.5 * (d - 1)) - log_gamma(0.5 * d));
    return integrate(spec).value / norm;
}

namespace {

// Radial integrand f(r) r^{d-1} K(rho, r) integrated over (a, b) with
// declared endpoint exponents.
double radial_piece(const RadialProfile& profile, double rho, double a, double b,
                    std::optional<double> p_lo, std::optional<double> p_hi,
                    const PotentialOptions& opts) {
    const RieszKernel& k = profile.kernel();
    const int d = k.d();
    IntegrationSpec spec;
    spec.integrand = [&profile, &k, rho, d, &opts](double r) {
        if (r <= 0.0) return 0.0;
        return profile.value(r) * std::pow(r, d - 1) *
               angular_kernel_average(k, rho, r, opts.rel_tol * 0.1);
    };
    spec.lower = a;
    spec.upper = b;
    spec.singular_exponent_lower = p_lo;
    spec.singular_exponent_upper = p_hi;
    spec.rel_tol = opts.rel_tol;
    spec.abs_tol = opts.abs_tol;
    return integrate(spec).value;
}

// Same integral over an interval touching the diagonal r = rho, taken in the
// shifted variable tau = |r - rho| so the kernel keeps full relative
// precision through its near-diagonal blowup.  `sign` is +1 for (rho, rho +
// length), -1 for (rho - length, rho).
double radial_piece_shifted(const RadialProfile& profile, double rho, int sign, double length,
                            std::optional<double> p_diag, std::optional<double> p_far,
                            const PotentialOptions& opts) {
    const RieszKernel& k = profile.kernel();
    const int d = k.d();
    IntegrationSpec spec;
    spec.integrand = [&profile, &k, rho, sign, d, &opts](double tau) {
        const double r = rho + sign * tau;
        if (r <= 0.0) return 0.0;
        return profile.value(r) * std::pow(r, d - 1) *
               angular_kernel_average_gap(k, rho, r, -sign * tau, opts.rel_tol * 0.1);
    };
    spec.lower = 0.0;
    spec.upper = length;
    spec.singular_exponent_lower = p_diag;
    spec.singular_exponent_upper = p_far;
    spec.rel_tol = opts.rel_tol;
    spec.abs_tol = opts.abs_tol;
    return integrate(spec).value;
}

} // namespace

double radial_potential(const RadialProfile& profile, double rho, const PotentialOptions& opts) {
    if (!(rho >= 0.0)) throw DomainError("radial_potential: radius must be nonnegative");
    const RieszKernel& k = profile.kernel();
    const int d = k.d();
    const double s = k.s();
    const double R = profile.outer_radius();
    const double omega = surface_area(d - 1);

    // K(rho, r) blows up like |rho - r|^{d-1-s} across the diagonal when
    // s > d-1 (log at equality); declare that exponent when splitting there.
    std::optional<double> p_diag;
    if (s > d - 1) p_diag = s - (d - 1);

    const double p_edge = profile.edge_exponent();
    std::optional<double> edge =
        p_edge > 0.0 ? std::optional<double>(p_edge) : std::nullopt;

    if (std::isinf(R)) {
        const double t = profile.tail_decay();
        if (!(t > 1.0))
            throw DomainError("radial_potential: unbounded profile needs declared tail decay > 1");
        const double split = std::max(2.0 * rho, 1.0);
        double head;
        if (rho > 0.0 && rho < split) {
            head = radial_piece_shifted(profile, rho, -1, rho, p_diag, std::nullopt, opts) +
                   radial_piece_shifted(profile, rho, +1, split - rho, p_diag, std::nullopt, opts);
        } else {
            head = radial_piece(profile, rho, 0.0, split, std::nullopt, std::nullopt, opts);
        }
        // integrand decays like r^{d-1} * r^{-t-s-...}; the declared profile
        // decay t already refers to the full density, so the integrand tail is
        // r^{d-1-s} f(r) ~ r^{d-1-s-t}
        const double core_decay = t + s - (d - 1);
        if (!(core_decay > 1.0))
            throw DomainError("radial_potential: declared tail decay too slow for convergence");
        auto core = [&profile, &k, rho, d, split, &opts](double u) {
            const double r = split + u;
            return profile.value(r) * std::pow(r, d - 1) *
                   angular_kernel_average(k, rho, r, opts.rel_tol * 0.1);
        };
        double tail = integrate_halfline_weighted(0.0, core_decay, core, opts.rel_tol, opts.abs_tol);
        return omega * (head + tail);
    }

    double total;
    if (rho > 0.0 && rho < R) {
        total = radial_piece_shifted(profile, rho, -1, rho, p_diag, std::nullopt, opts) +
                radial_piece_shifted(profile, rho, +1, R - rho, p_diag, edge, opts);
    } else {
        total = radial_piece(profile, rho, 0.0, R, std::nullopt, edge, opts);
    }
    return omega * total;
}

AmbientPoint kelvin_map(const AmbientPoint& x, const AmbientPoint& center) {
    if (!(center.height > 0.0)) throw DomainError("kelvin_map: center height must be positive");
    if (x.base.size() != center.base.size())
        throw DomainError("kelvin_map: dimension mismatch");
    Eigen::VectorXd diff_base = x.base - center.base;
    const double diff_h = x.height - center.height;
    const double n2 = diff_base.squaredNorm() + diff_h * diff_h;
    if (n2 == 0.0) throw DomainError("kelvin_map: point coincides with the center");
    const double factor = 2.0 * center.height / n2;
    return AmbientPoint{center.base + factor * diff_base, center.height + factor * diff_h};
}

} // namespace riesz
