#include "riesz/classification.hpp"

#include <cmath>

#include "riesz/special_functions.hpp"

namespace riesz {

namespace {

constexpr double kBand = 1e-12;

double omega_ws(const RieszKernel& k) { return surface_area(k.d()) * sphere_energy(k); }

ClassificationReport make_report(Verdict v) {
    ClassificationReport r{};
    r.verdict = v;
    r.justification = verdict_justification(v);
    return r;
}

} // namespace

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::AdmissibleCompact: return "Admissible-Compact";
        case Verdict::WeaklyAdmissibleCompact: return "WeaklyAdmissible-Compact";
        case Verdict::WeaklyAdmissibleFullPlane: return "WeaklyAdmissible-FullPlane";
        case Verdict::WeaklyAdmissibleUnknown: return "WeaklyAdmissible-Unknown";
        case Verdict::NoSolution: return "NoSolution";
        case Verdict::Indeterminate: return "Indeterminate";
    }
    return "?";
}

const char* verdict_justification(Verdict v) {
    switch (v) {
        case Verdict::AdmissibleCompact:
            return "total-charge-below-minus-one";
        case Verdict::WeaklyAdmissibleCompact:
            return "unit-deficit-positive-height-moment";
        case Verdict::WeaklyAdmissibleFullPlane:
            return "support-is-entire-conductor";
        case Verdict::WeaklyAdmissibleUnknown:
            return "unit-deficit-nonpositive-height-moment";
        case Verdict::NoSolution:
            return "attraction-deficit-pointwise-bound";
        case Verdict::Indeterminate:
            return "aggregate-data-insufficient";
    }
    return "?";
}

const char* pair_case_name(PairCase c) {
    switch (c) {
        case PairCase::SupportOutsideBall: return "i";
        case PairCase::SupportEverywhere: return "ii";
        case PairCase::SupportInsideBall: return "iii";
    }
    return "?";
}

ClassificationReport classify_config(const ChargeConfig& config) {
    const auto& charges = config.charges();
    double total = 0.0, abs_total = 0.0, negative_sum = 0.0;
    for (const auto& c : charges) {
        total += c.gamma;
        abs_total += std::abs(c.gamma);
        if (c.gamma < 0.0) negative_sum += c.gamma;
    }
    const double moment = config.height_moment();
    double abs_moment = 0.0;
    for (const auto& c : charges)
        abs_moment += std::abs(c.gamma) * std::pow(c.height, config.kernel().alpha());

    const double band_total = kBand * std::max(1.0, abs_total);
    const double band_moment = kBand * std::max(1.0, abs_moment);

    ClassificationReport report{};
    report.total_charge = total;
    report.moment = moment;

    const bool at_unit = std::abs(total + 1.0) <= band_total;
    if (at_unit) {
        if (charges.size() == 1) {
            report.verdict = Verdict::WeaklyAdmissibleFullPlane;
        } else if (moment > band_moment) {
            report.verdict = Verdict::WeaklyAdmissibleCompact;
        } else {
            report.verdict = Verdict::WeaklyAdmissibleUnknown;
            report.boundary_case = std::abs(moment) <= band_moment;
        }
    } else if (total < -1.0) {
        report.verdict = Verdict::AdmissibleCompact;
    } else {
        // total > -1: existence can fail.  The pointwise bound
        // Q - Q(inf) >= (sum of negative charges)/r^s rules out a minimizer
        // when the total attraction stays below 1 in size.
        const bool weak_attraction = negative_sum > -1.0 + band_total;
        if (weak_attraction && !config.kernel().weak()) {
            report.verdict = Verdict::NoSolution;
        } else {
            report.verdict = Verdict::Indeterminate;
        }
    }
    report.justification = verdict_justification(report.verdict);
    return report;
}

PairThresholds pair_thresholds(const RieszKernel& kernel, double gamma) {
    if (!(gamma > 0.0)) throw DomainError("pair_thresholds: repellent charge must be positive");
    const double g = gamma / (1.0 + gamma);
    return PairThresholds{g, std::pow(g, 1.0 / kernel.d()), std::pow(g, -1.0 / kernel.alpha())};
}

double pair_exclusion_radius(const RieszKernel& kernel, double gamma, double h1, double h2) {
    if (!(gamma > 0.0) || !(h1 > 0.0) || !(h2 > 0.0))
        throw DomainError("pair_exclusion_radius: gamma, h1, h2 must be positive");
    const double g = gamma / (1.0 + gamma);
    const double alpha = kernel.alpha();
    const double q = h2 / h1;
    const double rho = std::pow(g * std::pow(q, alpha), 2.0 / (2.0 * kernel.d() - kernel.s()));
    double numer = rho * h1 * h1 - h2 * h2;
    const double denom = 1.0 - rho;
    // boundary snap: at q = g^{1/d} the numerator vanishes identically
    if (std::abs(numer) <= 64.0 * 1e-16 * (rho * h1 * h1 + h2 * h2)) numer = 0.0;
    const double ratio = numer / denom;
    if (!(ratio >= 0.0))
        throw NumericError("pair_exclusion_radius: radius undefined between the thresholds",
                           ratio, 0.0);
    return std::sqrt(ratio);
}

ClassificationReport classify_pair(const RieszKernel& kernel, double gamma, double h1,
                                   double h2) {
    kernel.require_full_mode("classify_pair");
    const PairThresholds th = pair_thresholds(kernel, gamma);
    if (!(h1 > 0.0) || !(h2 > 0.0))
        throw DomainError("classify_pair: heights must be positive");
    const double q = h2 / h1;
    const double band = kBand * std::max(1.0, q);

    ClassificationReport report{};
    report.threshold_lower = th.lower;
    report.threshold_upper = th.upper;
    report.total_charge = -1.0;
    const double alpha = kernel.alpha();
    report.moment = -(1.0 + gamma) * std::pow(h1, alpha) + gamma * std::pow(h2, alpha);
    report.boundary_case = std::abs(q - th.lower) <= band || std::abs(q - th.upper) <= band;

    if (q < th.lower - band) {
        report.pair_case = PairCase::SupportOutsideBall;
        report.verdict = Verdict::WeaklyAdmissibleUnknown;
        report.radius = pair_exclusion_radius(kernel, gamma, h1, h2);
    } else if (q <= th.upper + band) {
        report.pair_case = PairCase::SupportEverywhere;
        report.verdict = Verdict::WeaklyAdmissibleFullPlane;
        // at the lower boundary the sign-change radius degenerates to 0;
        // at the upper one it escapes to infinity and is not reported
        if (std::abs(q - th.lower) <= band)
            report.radius = pair_exclusion_radius(kernel, gamma, h1, h2);
    } else {
        report.pair_case = PairCase::SupportInsideBall;
        report.verdict = Verdict::WeaklyAdmissibleCompact;
        report.radius = pair_exclusion_radius(kernel, gamma, h1, h2);
    }
    report.justification = verdict_justification(report.verdict);
    return report;
}

double pair_signed_density(const RieszKernel& kernel, double gamma, double h1, double h2,
                           double r) {
    if (!(gamma > 0.0) || !(h1 > 0.0) || !(h2 > 0.0))
        throw DomainError("pair_signed_density: gamma, h1, h2 must be positive");
    if (!(r >= 0.0)) throw DomainError("pair_signed_density: radius must be nonnegative");
    const double alpha = kernel.alpha();
    const double expo = kernel.d() - 0.5 * kernel.s();
    const double pref = std::pow(2.0, alpha) / omega_ws(kernel);
    return pref * ((1.0 + gamma) * std::pow(h1, alpha) * std::pow(r * r + h1 * h1, -expo) -
                   gamma * std::pow(h2, alpha) * std::pow(r * r + h2 * h2, -expo));
}

double pair_tail_coefficient(const RieszKernel& kernel, double gamma, double h1, double h2) {
    const double alpha = kernel.alpha();
    const double pref = std::pow(2.0, alpha) / omega_ws(kernel);
    return pref * ((1.0 + gamma) * std::pow(h1, alpha) - gamma * std::pow(h2, alpha));
}

} // namespace riesz
