#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <vector>

#include "riesz/kernel_core.hpp"

namespace riesz {

/// State of a discrete energy minimization: N particles on R^d minimizing
///   E = (1/N^2) sum_{i != j} |x_i - x_j|^{-s} + (2/N) sum_i Q(x_i),
/// the N-point discretization of the weighted continuous energy.
struct ParticleSystem {
    RieszKernel kernel;
    ChargeConfig config;
    Eigen::MatrixXd positions; // N x d
    double energy = 0.0;
    int iteration_count = 0;
    std::uint64_t seed = 0;
    std::vector<double> energy_trace; // energies after each accepted step
};

struct MinimizeOptions {
    double armijo = 1e-4;        // sufficient-decrease constant
    double initial_step_scale = 1e-2; // times the attractor height
    double gradient_tol_scale = 1e-8; // convergence at |grad| < scale * N
    // diagnostic hook: start from these positions instead of the seeded draw
    std::optional<Eigen::MatrixXd> initial_positions;
};

/// Deterministic gradient descent with backtracking on the discrete energy.
/// Initial positions are uniform in the disk of radius 2h around the
/// attractor's projection; identical inputs reproduce identical positions.
/// Refuses configurations whose classification admits no minimizer; throws
/// NumericError if particles run away (empirical sign of non-compact
/// support).
ParticleSystem minimize_particles(const ChargeConfig& config, int N, std::uint64_t seed,
                                  int max_iters, const MinimizeOptions& opts = {});

/// Discrete energy of a position matrix under the configuration's field
/// (exposed for tests).
double particle_energy(const ChargeConfig& config, const Eigen::MatrixXd& positions);

/// Quantile of the particle radii |x_i|; 0.99 by default damps the
/// fluctuation of the most extreme particle.
double support_radius_estimate(const ParticleSystem& system, double quantile = 0.99);

/// Radial histogram of the particles converted to a Lebesgue density on R^d
/// (count / (N * shell volume)); sample radii are the bin centers and the
/// outer radius is the largest particle norm.
RadialProfile radial_histogram(const ParticleSystem& system, int bins);

} // namespace riesz
