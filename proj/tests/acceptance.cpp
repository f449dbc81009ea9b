// Acceptance suite: runs every contract criterion at its stated tolerance and
// prints one PASS/FAIL line per criterion.  Exit status is the number of
// failed criteria.

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "riesz/balayage.hpp"
#include "riesz/classification.hpp"
#include "riesz/kernel_core.hpp"
#include "riesz/oracle.hpp"
#include "riesz/quadrature.hpp"
#include "riesz/single_attractor.hpp"
#include "riesz/special_functions.hpp"

using namespace riesz;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int id, const char* name, bool ok, const std::string& detail) {
    std::printf("%s  %2d %-28s %s\n", ok ? "PASS" : "FAIL", id, name, detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof(buf), f, ap);
    va_end(ap);
    return buf;
}

// --- criterion 1: reference radii table ------------------------------------
void criterion_1() {
    auto t0 = Clock::now();
    RieszKernel k31(3, 1.0);
    const std::pair<double, double> table[] = {
        {-10.0, 0.524}, {-2.5, 1.090}, {-1.1, 3.90}, {-1.001, 38.73}};
    bool ok = true;
    std::string detail;
    for (auto [gamma, expected] : table) {
        double R0 = solve_radius(k31, gamma, 1.0);
        double rel = std::abs(R0 / expected - 1.0);
        if (rel > 5e-3) ok = false;
        detail += fmt("R(%g)=%.4f ", gamma, R0);
    }
    double dt = seconds_since(t0);
    ok = ok && dt < 1.0;
    report(1, "radii table d=3 s=1", ok, detail + fmt("[%.2fs]", dt));
}

// --- criterion 2: attractor-repellent pair radius ---------------------------
void criterion_2() {
    auto t0 = Clock::now();
    auto rep = classify_pair(RieszKernel(2, 1.0), 1.0, 1.0, 3.0);
    double dt = seconds_since(t0);
    bool ok = rep.pair_case == PairCase::SupportInsideBall && rep.radius &&
              std::abs(*rep.radius / 4.978 - 1.0) <= 1e-3 && dt < 0.1;
    report(2, "pair case (iii) radius", ok,
           fmt("case=%s R=%.4f [%.3fs]", pair_case_name(*rep.pair_case), *rep.radius, dt));
}

// --- criterion 3: closed-form balayage mass ---------------------------------
void criterion_3() {
    RieszKernel k31(3, 1.0);
    bool ok = true;
    double worst = 0.0;
    for (double R : {0.5, 1.0, 2.0, 10.0}) {
        double err = std::abs(ball_balayage_mass(k31, R, 1.0) - R / std::sqrt(1.0 + R * R));
        worst = std::max(worst, err);
        if (err > 1e-10) ok = false;
    }
    report(3, "balayage mass closed form", ok, fmt("max|err|=%.2e", worst));
}

// --- criterion 4: balayage potential identity -------------------------------
void criterion_4() {
    auto t0 = Clock::now();
    RieszKernel k21(2, 1.0);
    auto profile = RadialProfile::from_function(
        k21, 1.0, [&](double r) { return ball_balayage_density(k21, 1.0, 1.0, r); });
    profile.set_edge_exponent(0.5);
    double worst_rel = 0.0;
    bool exterior_ok = true;
    for (int i = 0; i < 10; ++i) {
        double rho = 0.05 + 0.9 * i / 9.0;
        double u = radial_potential(profile, rho);
        double expected = std::pow(rho * rho + 1.0, -0.5);
        worst_rel = std::max(worst_rel, std::abs(u / expected - 1.0));
    }
    for (int i = 0; i < 10; ++i) {
        double rho = 1.05 + 0.45 * i;
        double u = radial_potential(profile, rho);
        if (u > std::pow(rho * rho + 1.0, -0.5) * (1.0 + 1e-8)) exterior_ok = false;
    }
    double dt = seconds_since(t0);
    bool ok = worst_rel <= 1e-5 && exterior_ok && dt < 10.0;
    report(4, "balayage potential identity", ok,
           fmt("max rel=%.2e exterior<=bound:%s [%.1fs]", worst_rel, exterior_ok ? "yes" : "no",
               dt));
}

// --- criterion 5: equilibrium mass and Robin constant -----------------------
void criterion_5() {
    RieszKernel k31(3, 1.0);
    EquilibriumSolution sol31 = solve_equilibrium(k31, -10.0, 1.0);
    bool ok31 = std::abs(sol31.mass_check - 1.0) <= 1e-6 &&
                std::abs(sol31.robin_constant - (-6.9493)) <= 1e-3;
    RieszKernel k32(3, 2.0);
    EquilibriumSolution sol32 = solve_equilibrium(k32, -5.0, 1.0);
    bool ok32 = std::abs(sol32.mass_check - 1.0) <= 1e-4;
    report(5, "equilibrium mass + Robin", ok31 && ok32,
           fmt("mass31=%.8f F=%.5f mass32=%.8f", sol31.mass_check, sol31.robin_constant,
               sol32.mass_check));
}

// --- criterion 6: weighted-potential verification ---------------------------
void criterion_6() {
    auto t0 = Clock::now();
    bool ok = true;
    std::string detail;
    for (auto [s, gamma] : {std::pair{1.0, -10.0}, {2.0, -5.0}}) {
        RieszKernel k(3, s);
        EquilibriumSolution sol = solve_equilibrium(k, gamma, 1.0);
        ChargeConfig cfg(k, {{gamma, 1.0}});
        FrostmanReport rep = verify_frostman(sol, cfg, 20, 5);
        bool this_ok = rep.max_interior_deviation <= 1e-4 * std::abs(rep.robin) &&
                       rep.min_exterior_slack >= -1e-6;
        ok = ok && this_ok;
        detail += fmt("s=%g dev=%.1e slack=%+.1e ", s, rep.max_interior_deviation,
                      rep.min_exterior_slack);
    }
    double dt = seconds_since(t0);
    ok = ok && dt < 60.0;
    report(6, "variational inequalities", ok, detail + fmt("[%.1fs]", dt));
}

// --- criterion 7: boundary vanishing for s > d-2 ----------------------------
void criterion_7() {
    RieszKernel k32(3, 2.0);
    double R0 = solve_radius(k32, -5.0, 1.0);
    double central = equilibrium_density(k32, -5.0, 1.0, R0, 0.0);
    bool ok = true;
    double prev = central, last_ratio = 1.0;
    for (int k = 2; k <= 5; ++k) {
        double v = equilibrium_density(k32, -5.0, 1.0, R0, R0 * (1.0 - std::pow(10.0, -k)));
        if (!(v > 0.0) || !(v < prev)) ok = false;
        prev = v;
        last_ratio = v / central;
    }
    ok = ok && last_ratio < 1e-3;
    report(7, "boundary vanishing", ok, fmt("density ratio at k=5: %.2e", last_ratio));
}

// --- criterion 8: hypergeometric identity suite ------------------------------
void criterion_8() {
    std::mt19937_64 rng(20240810);
    std::uniform_real_distribution<double> uz(1e-3, 100.0), us(0.01, 0.99);
    const int dims[4] = {2, 3, 4, 5};
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        int d = dims[rng() % 4];
        double lo = std::max(0.0, d - 2.0);
        double s = lo + (d - lo) * us(rng);
        double z = uz(rng);
        double lhs = std::pow(z, 0.5 * s) *
                     (gauss_2f1(0.5 * s, 0.5 * d, 1.0 + 0.5 * s, -z) -
                      std::pow(1.0 + z, -0.5 * d));
        double rhs = d / (s + 2.0) * std::pow(z, 0.5 * s + 1.0) *
                     gauss_2f1(1.0 + 0.5 * s, 1.0 + 0.5 * d, 2.0 + 0.5 * s, -z);
        worst = std::max(worst, std::abs(lhs / rhs - 1.0));
    }
    double worst_quad = 0.0;
    for (double alpha : {0.25, 0.5, 1.0, 1.5, 1.9}) {
        double v = integrate_halfline_weighted(0.5 * alpha - 1.0, 1.0,
                                               [](double u) { return 1.0 / (1.0 + u); }, 1e-11);
        worst_quad =
            std::max(worst_quad, std::abs(v * std::sin(0.5 * M_PI * alpha) / M_PI - 1.0));
    }
    bool ok = worst <= 1e-10 && worst_quad <= 1e-9;
    report(8, "hypergeometric identities", ok,
           fmt("G-identity max=%.2e, pi/sin max=%.2e", worst, worst_quad));
}

// --- criterion 9: scaling and monotonicity ----------------------------------
void criterion_9() {
    bool ok = true;
    std::string detail;
    // radius linear in the height
    RieszKernel k32(3, 2.0);
    double base = solve_radius(k32, -4.0, 1.0);
    double scale_err = 0.0;
    for (double lambda : {0.3, 2.0, 11.0})
        scale_err = std::max(
            scale_err, std::abs(solve_radius(k32, -4.0, lambda) / (lambda * base) - 1.0));
    if (scale_err > 1e-10) ok = false;
    detail += fmt("scale err=%.1e ", scale_err);

    // balayage mass monotone on a 20x20 grid
    RieszKernel k21(2, 1.0);
    bool monotone = true;
    for (int i = 0; i < 20; ++i) {
        double h = 0.2 * std::pow(10.0, 1.5 * i / 19.0);
        double prev_m = 0.0;
        for (int j = 0; j < 20; ++j) {
            double R = 0.1 * std::pow(10.0, 2.0 * j / 19.0);
            double m = ball_balayage_mass(k21, R, h);
            if (m < prev_m) monotone = false;
            prev_m = m;
        }
    }
    for (int j = 0; j < 20; ++j) {
        double R = 0.1 * std::pow(10.0, 2.0 * j / 19.0);
        double prev_m = 1.0;
        for (int i = 0; i < 20; ++i) {
            double h = 0.2 * std::pow(10.0, 1.5 * i / 19.0);
            double m = ball_balayage_mass(k21, R, h);
            if (m > prev_m) monotone = false;
            prev_m = m;
        }
    }
    if (!monotone) ok = false;
    detail += fmt("m_R monotone:%s ", monotone ? "yes" : "no");

    // asymptotic mass deficit at R/h = 100
    RieszKernel k31(3, 1.0);
    double deficit = 1.0 - ball_balayage_mass(k31, 100.0, 1.0);
    double predicted = 2.0 / (2.0 * beta_value(0.5, 1.0)) * 1e-4;
    double asym_rel = std::abs(deficit / predicted - 1.0);
    if (asym_rel > 0.02) ok = false;
    detail += fmt("asym rel=%.1e ", asym_rel);

    // Robin constant non-decreasing in gamma
    double prev = -std::numeric_limits<double>::infinity();
    bool robin_monotone = true;
    for (double gamma : {-10.0, -5.0, -2.0, -1.5}) {
        double F = solve_equilibrium(k31, gamma, 1.0).robin_constant;
        if (F < prev) robin_monotone = false;
        prev = F;
    }
    if (!robin_monotone) ok = false;
    detail += fmt("F monotone:%s", robin_monotone ? "yes" : "no");
    report(9, "scaling + monotonicity", ok, detail);
}

// --- criterion 10: threshold exactness ---------------------------------------
void criterion_10() {
    RieszKernel k21(2, 1.0);
    PairThresholds th = pair_thresholds(k21, 1.0);
    double r_at_lower = pair_exclusion_radius(k21, 1.0, 1.0, th.lower);
    double tail_at_upper = pair_tail_coefficient(k21, 1.0, 1.0, th.upper);
    auto q1 = classify_pair(k21, 1.0, 1.0, 1.0);
    bool ok = r_at_lower <= 1e-10 && std::abs(tail_at_upper) <= 1e-10 &&
              q1.pair_case == PairCase::SupportEverywhere;
    report(10, "threshold exactness", ok,
           fmt("R(lower)=%.1e tail(upper)=%.1e q=1 case=%s", r_at_lower, tail_at_upper,
               pair_case_name(*q1.pair_case)));
}

// --- criterion 11: particle oracle agreement ---------------------------------
// Note on the radius sub-check: the fully converged discrete minimizer
// concentrates more than the continuum measure at finite N (the 0.99-quantile
// deficit shrinks like ~N^{-1/2}: about 22% at N=100, 13% at N=400, 9% at
// N=1000 for these parameters, and warm-starting from an exact sample of the
// analytic density relaxes to the same compressed state with lower energy).
// The 10% tolerance at N=400 is therefore tighter than the discrete energy
// allows; the measured ratio is reported against it unchanged.
void criterion_11() {
    RieszKernel k21(2, 1.0);
    ChargeConfig cfg(k21, {{-5.0, 1.0}});
    const double R0 = solve_radius(k21, -5.0, 1.0);

    auto t0 = Clock::now();
    ParticleSystem sys400 = minimize_particles(cfg, 400, 2024, 12000);
    double dt400 = seconds_since(t0);
    double q99 = support_radius_estimate(sys400, 0.99);
    bool radius_ok = std::abs(q99 / R0 - 1.0) <= 0.10 && dt400 < 60.0;

    t0 = Clock::now();
    ParticleSystem sys1000 = minimize_particles(cfg, 1000, 2024, 8000);
    double dt1000 = seconds_since(t0);
    const int bins = 16;
    RadialProfile hist = radial_histogram(sys1000, bins);
    double outer = hist.outer_radius();
    double hi = std::max(outer, R0) * 1.02;
    const int M = 6000;
    double l1 = 0.0;
    for (int i = 0; i < M; ++i) {
        double r = (i + 0.5) * hi / M;
        double hv = 0.0;
        if (r < outer) hv = hist.values()[std::min(bins - 1, static_cast<int>(r / outer * bins))];
        double an = r < R0 ? equilibrium_density(k21, -5.0, 1.0, R0, r) : 0.0;
        l1 += std::abs(hv - an) * 2.0 * M_PI * r * (hi / M);
    }
    bool l1_ok = l1 <= 0.15 && dt1000 < 300.0;

    report(11, "oracle agreement", radius_ok && l1_ok,
           fmt("q99/R0=%.4f (N=400, %.0fs) L1=%.3f (N=1000, %d bins, %.0fs)", q99 / R0, dt400,
               l1, bins, dt1000));
}

// --- figure-curve shape checks (qualitative) ---------------------------------
void figure_shapes() {
    bool ok = true;
    std::string detail;
    // support radius grows monotonically as the charge weakens toward -1
    RieszKernel k32(3, 2.0);
    double prev = 0.0;
    bool monotone = true;
    for (int i = 0; i <= 40; ++i) {
        double gamma = -10.0 + (10.0 - 1.05) * i / 40.0;
        double R = solve_radius(k32, gamma, 1.0);
        if (R <= prev) monotone = false;
        prev = R;
    }
    ok = ok && monotone;
    detail += fmt("R0(gamma) increasing:%s ", monotone ? "yes" : "no");

    // density curves: positive inside, larger support for the farther charge
    double R1 = solve_radius(k32, -5.0, 1.0);
    double R2 = solve_radius(k32, -5.0, 2.0);
    ok = ok && R2 > R1;
    bool positive = true;
    for (int i = 0; i < 30; ++i) {
        double r = R1 * i / 30.0;
        if (equilibrium_density(k32, -5.0, 1.0, R1, r) <= 0.0) positive = false;
    }
    ok = ok && positive;
    detail += fmt("densities positive:%s ", positive ? "yes" : "no");

    // pair sign-change radius: decreasing in gamma; in h2 it diverges at the
    // case-(ii) threshold, dips, then grows again (single turning point)
    bool gamma_decreasing = true;
    prev = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= 30; ++i) {
        double gamma = 0.4 + (8.0 - 0.4) * i / 30.0;
        double R = pair_exclusion_radius(k32, gamma, 1.0, 4.0);
        if (R >= prev) gamma_decreasing = false;
        prev = R;
    }
    int h2_sign_flips = 0;
    prev = pair_exclusion_radius(k32, 1.0, 1.0, 2.2);
    bool was_decreasing = true;
    for (int i = 1; i <= 30; ++i) {
        double h2 = 2.2 + (10.0 - 2.2) * i / 30.0;
        double R = pair_exclusion_radius(k32, 1.0, 1.0, h2);
        bool decreasing = R < prev;
        if (decreasing != was_decreasing) ++h2_sign_flips;
        was_decreasing = decreasing;
        prev = R;
    }
    bool pair_ok = gamma_decreasing && h2_sign_flips == 1;
    ok = ok && pair_ok;
    detail += fmt("pair R(gamma) decreasing:%s R(h2) single dip:%s",
                  gamma_decreasing ? "yes" : "no", h2_sign_flips == 1 ? "yes" : "no");
    report(12, "figure curve shapes", ok, detail);
}

} // namespace

int main() {
    std::printf("acceptance criteria\n-------------------\n");
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    figure_shapes();
    std::printf("-------------------\n%d criterion(s) failed\n", failures);
    return failures;
}
