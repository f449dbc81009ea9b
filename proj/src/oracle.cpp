#include "riesz/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "riesz/classification.hpp"
#include "riesz/single_attractor.hpp"
#include "riesz/special_functions.hpp"

namespace riesz {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Uniform doubles in [0,1) straight from the engine's bits, so streams do not
// depend on library distribution internals.
class Uniform01 {
public:
    explicit Uniform01(std::uint64_t seed) : eng_(seed) {}
    double operator()() { return (eng_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 eng_;
};

// kernel value r^{-s} and the gradient factor -s r^{-s-2}, with fast paths
// for the common integer exponents
struct KernelPow {
    explicit KernelPow(double s) : s(s), mode(s == 1.0 ? 1 : (s == 2.0 ? 2 : 0)) {}
    double value(double r2) const {
        if (mode == 1) return 1.0 / std::sqrt(r2);
        if (mode == 2) return 1.0 / r2;
        return std::pow(r2, -0.5 * s);
    }
    double grad_coeff(double r2) const { // d/dr2 applied factor: -s r^{-s-2}
        if (mode == 1) return -1.0 / (r2 * std::sqrt(r2));
        if (mode == 2) return -2.0 / (r2 * r2);
        return -s * std::pow(r2, -0.5 * s - 1.0);
    }
    double s;
    int mode;
};

// positions are held d x N column-major, one contiguous column per particle
double energy_flat(const ChargeConfig& config, const std::vector<double>& x, int N, int d) {
    const KernelPow kp(config.kernel().s());
    double pair = 0.0;
    for (int i = 0; i < N; ++i) {
        const double* xi = &x[static_cast<std::size_t>(i) * d];
        for (int j = i + 1; j < N; ++j) {
            const double* xj = &x[static_cast<std::size_t>(j) * d];
            double r2 = 0.0;
            for (int k = 0; k < d; ++k) {
                const double diff = xi[k] - xj[k];
                r2 += diff * diff;
            }
            pair += kp.value(r2);
        }
    }
    double field = 0.0;
    for (int i = 0; i < N; ++i) {
        const double* xi = &x[static_cast<std::size_t>(i) * d];
        double r2 = 0.0;
        for (int k = 0; k < d; ++k) r2 += xi[k] * xi[k];
        for (const auto& c : config.charges())
            field += c.gamma * kp.value(r2 + c.height * c.height);
    }
    return 2.0 * pair / (static_cast<double>(N) * N) + 2.0 * field / N;
}

void gradient_flat(const ChargeConfig& config, const std::vector<double>& x, int N, int d,
                   std::vector<double>& grad) {
    const double s = config.kernel().s();
    const KernelPow kp(s);
    std::fill(grad.begin(), grad.end(), 0.0);
    const double pair_w = 2.0 / (static_cast<double>(N) * N);
    for (int i = 0; i < N; ++i) {
        const double* xi = &x[static_cast<std::size_t>(i) * d];
        double* gi = &grad[static_cast<std::size_t>(i) * d];
        for (int j = i + 1; j < N; ++j) {
            const double* xj = &x[static_cast<std::size_t>(j) * d];
            double* gj = &grad[static_cast<std::size_t>(j) * d];
            double r2 = 0.0;
            for (int k = 0; k < d; ++k) {
                const double diff = xi[k] - xj[k];
                r2 += diff * diff;
            }
            const double c = pair_w * kp.grad_coeff(r2);
            for (int k = 0; k < d; ++k) {
                const double f = c * (xi[k] - xj[k]);
                gi[k] += f;
                gj[k] -= f;
            }
        }
    }
    const double field_w = 2.0 / N;
    for (int i = 0; i < N; ++i) {
        const double* xi = &x[static_cast<std::size_t>(i) * d];
        double* gi = &grad[static_cast<std::size_t>(i) * d];
        double r2 = 0.0;
        for (int k = 0; k < d; ++k) r2 += xi[k] * xi[k];
        double coeff = 0.0;
        for (const auto& c : config.charges())
            coeff += c.gamma * kp.grad_coeff(r2 + c.height * c.height);
        for (int k = 0; k < d; ++k) gi[k] += field_w * coeff * xi[k];
    }
}

std::vector<double> initial_positions_flat(const ChargeConfig& config, int N, int d,
                                           std::uint64_t seed) {
    const double radius = 2.0 * config.strongest_attractor_height();
    Uniform01 u01(seed);
    std::vector<double> x(static_cast<std::size_t>(N) * d);
    std::vector<double> dir(d);
    for (int i = 0; i < N; ++i) {
        // direction from normalized Gaussians (Box-Muller), radius from the
        // d-th root of a uniform draw
        int k = 0;
        while (k < d) {
            const double u1 = std::max(u01(), 1e-300);
            const double u2 = u01();
            const double m = std::sqrt(-2.0 * std::log(u1));
            dir[k++] = m * std::cos(2.0 * kPi * u2);
            if (k < d) dir[k++] = m * std::sin(2.0 * kPi * u2);
        }
        double n2 = 0.0;
        for (int k2 = 0; k2 < d; ++k2) n2 += dir[k2] * dir[k2];
        double n = std::sqrt(n2);
        if (n == 0.0) {
            std::fill(dir.begin(), dir.end(), 0.0);
            dir[0] = 1.0;
            n = 1.0;
        }
        const double r = radius * std::pow(u01(), 1.0 / d);
        for (int k2 = 0; k2 < d; ++k2) x[static_cast<std::size_t>(i) * d + k2] = r / n * dir[k2];
    }
    return x;
}

} // namespace

double particle_energy(const ChargeConfig& config, const Eigen::MatrixXd& positions) {
    const int N = static_cast<int>(positions.rows());
    const int d = static_cast<int>(positions.cols());
    std::vector<double> flat(static_cast<std::size_t>(N) * d);
    for (int i = 0; i < N; ++i)
        for (int k = 0; k < d; ++k) flat[static_cast<std::size_t>(i) * d + k] = positions(i, k);
    return energy_flat(config, flat, N, d);
}

ParticleSystem minimize_particles(const ChargeConfig& config, int N, std::uint64_t seed,
                                  int max_iters, const MinimizeOptions& opts) {
    if (N < 2) throw DomainError("minimize_particles: need at least 2 particles");
    const auto report = classify_config(config);
    if (report.verdict == Verdict::NoSolution || report.verdict == Verdict::Indeterminate)
        throw DomainError(
            "minimize_particles: configuration does not admit a minimizing measure "
            "(classification verdict " + std::string(verdict_name(report.verdict)) + ")");

    const RieszKernel& kernel = config.kernel();
    const int d = kernel.d();
    const double h_scale = config.strongest_attractor_height();

    double runaway_scale = h_scale;
    if (config.charges().size() == 1 && config.charges().front().gamma < -1.0)
        runaway_scale = solve_radius(kernel, config.charges().front().gamma, h_scale);

    std::vector<double> x;
    if (opts.initial_positions) {
        const Eigen::MatrixXd& init = *opts.initial_positions;
        if (init.rows() != N || init.cols() != d)
            throw DomainError("minimize_particles: initial positions have wrong shape");
        x.resize(static_cast<std::size_t>(N) * d);
        for (int i = 0; i < N; ++i)
            for (int k = 0; k < d; ++k) x[static_cast<std::size_t>(i) * d + k] = init(i, k);
    } else {
        x = initial_positions_flat(config, N, d, seed);
    }
    std::vector<double> grad(x.size()), trial(x.size());
    double energy = energy_flat(config, x, N, d);

    ParticleSystem system{kernel, config, Eigen::MatrixXd(), energy, 0, seed, {}};
    system.energy_trace.push_back(energy);

    // displacement of the fastest particle per trial step; starts at
    // 1e-2 h, doubles after easy acceptances, halves on rejection
    double step_len = opts.initial_step_scale * h_scale;
    const double step_len_max = 0.25 * h_scale;

    for (int iter = 0; iter < max_iters; ++iter) {
        gradient_flat(config, x, N, d, grad);

        double grad_norm2 = 0.0;
        for (std::size_t m = 0; m < grad.size(); ++m) grad_norm2 += grad[m] * grad[m];
        if (std::sqrt(grad_norm2) < opts.gradient_tol_scale * N) break;

        // normalize by the rms per-particle gradient so one tight pair cannot
        // freeze the whole system
        const double rms_row = std::sqrt(grad_norm2 / N);
        double step = step_len / rms_row;
        bool accepted = false;
        int backtracks = 0;
        for (; backtracks < 60; ++backtracks) {
            for (std::size_t m = 0; m < x.size(); ++m) trial[m] = x[m] - step * grad[m];
            const double trial_energy = energy_flat(config, trial, N, d);
            if (std::isfinite(trial_energy) &&
                trial_energy <= energy - opts.armijo * step * grad_norm2) {
                x.swap(trial);
                energy = trial_energy;
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted) break; // no decrease at the smallest step: stop
        if (backtracks == 0)
            step_len = std::min(2.0 * step_len, step_len_max);
        else
            step_len = std::max(step_len * std::pow(0.5, backtracks), 1e-12 * h_scale);

        ++system.iteration_count;
        system.energy_trace.push_back(energy);

        double max_norm2 = 0.0;
        for (int i = 0; i < N; ++i) {
            double n2 = 0.0;
            for (int k = 0; k < d; ++k) {
                const double v = x[static_cast<std::size_t>(i) * d + k];
                n2 += v * v;
            }
            max_norm2 = std::max(max_norm2, n2);
        }
        if (std::sqrt(max_norm2) > 1e6 * runaway_scale)
            throw NumericError(
                "minimize_particles: particles diverged; the equilibrium support may be "
                "unbounded", std::sqrt(max_norm2), 0.0);
    }

    system.energy = energy;
    system.positions.resize(N, d);
    for (int i = 0; i < N; ++i)
        for (int k = 0; k < d; ++k) system.positions(i, k) = x[static_cast<std::size_t>(i) * d + k];
    return system;
}

double support_radius_estimate(const ParticleSystem& system, double quantile) {
    if (!(quantile > 0.0 && quantile <= 1.0))
        throw DomainError("support_radius_estimate: quantile must lie in (0,1]");
    const int N = static_cast<int>(system.positions.rows());
    if (N == 0) throw DomainError("support_radius_estimate: empty system");
    std::vector<double> norms(N);
    for (int i = 0; i < N; ++i) norms[i] = system.positions.row(i).norm();
    std::sort(norms.begin(), norms.end());
    const int idx = std::min<int>(N - 1, static_cast<int>(std::ceil(quantile * N)) - 1);
    return norms[std::max(idx, 0)];
}

RadialProfile radial_histogram(const ParticleSystem& system, int bins) {
    if (bins < 1) throw DomainError("radial_histogram: need at least one bin");
    const int N = static_cast<int>(system.positions.rows());
    const int d = system.kernel.d();
    double outer = 0.0;
    std::vector<double> norms(N);
    for (int i = 0; i < N; ++i) {
        norms[i] = system.positions.row(i).norm();
        outer = std::max(outer, norms[i]);
    }
    if (outer == 0.0) outer = 1e-12;
    std::vector<int> counts(bins, 0);
    for (double r : norms) {
        int k = std::min(bins - 1, static_cast<int>(r / outer * bins));
        counts[k]++;
    }
    // unit-ball volume in R^d
    const double v_d = std::pow(kPi, 0.5 * d) / gamma_value(0.5 * d + 1.0);
    std::vector<double> radii(bins), values(bins);
    for (int k = 0; k < bins; ++k) {
        const double r_lo = outer * k / bins;
        const double r_hi = outer * (k + 1) / bins;
        const double shell = v_d * (std::pow(r_hi, d) - std::pow(r_lo, d));
        radii[k] = 0.5 * (r_lo + r_hi);
        values[k] = counts[k] / (static_cast<double>(N) * shell);
    }
    return RadialProfile(system.kernel, outer, std::move(radii), std::move(values));
}

} // namespace riesz
