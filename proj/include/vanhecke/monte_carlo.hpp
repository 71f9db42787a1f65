#pragma once

#include <Eigen/Dense>
#include <cstdint>

#include "vanhecke/estimator.hpp"
#include "vanhecke/model.hpp"

namespace vanhecke {

/// Generating process for the simulator: trend coefficients plus the noise
/// standard deviation. Draws are standard normal.
struct WhiteNoiseModel {
  Eigen::VectorXd true_beta;
  double sigma = 1.0;  // > 0
};

struct SimulationConfig {
  std::uint64_t replicates = 1;
  std::uint64_t seed = 0;
};

/// Empirical vs. theoretical mean squared prediction error at one point.
struct EmpiricalVarianceReport {
  double x_j = 0.0;
  double empirical_mse = 0.0;
  double theoretical_mse = 0.0;  // sigma^2 * (1 + f^T (F^T F)^{-1} f)
  double relative_error = 0.0;   // |empirical - theoretical| / theoretical
  std::uint64_t replicates = 0;
};

/// One synthetic field: v_i = f(x_i)^T beta + sigma * z_i with z_i drawn from
/// SplitMix64(seed) in sample order. Identical seeds give bit-identical
/// output.
SampleSet simulate_field(const Eigen::VectorXd& abscissas, const TrendBasis& basis,
                         const WhiteNoiseModel& model, std::uint64_t seed);

/// Monte Carlo check of the white-noise prediction error: each replicate
/// draws a fresh field plus an independent value at x_j and accumulates
/// (V_j - w^T V)^2 with the closed-form kriging weights. Requires x_j off
/// the sample abscissas (the error decomposition fails on them).
///
/// Replicate r draws from substream_seed(config.seed, r); squared errors are
/// accumulated block by block in a fixed order, so the OpenMP version below
/// returns a report bit-identical to the serial reference.
EmpiricalVarianceReport empirical_mse(const Eigen::VectorXd& abscissas,
                                      const TrendBasis& basis,
                                      const WhiteNoiseModel& model, double x_j,
                                      const SimulationConfig& config);

/// Serial reference implementation of empirical_mse, kept for testing and
/// benchmarking against the parallel kernel.
EmpiricalVarianceReport empirical_mse_serial(const Eigen::VectorXd& abscissas,
                                             const TrendBasis& basis,
                                             const WhiteNoiseModel& model, double x_j,
                                             const SimulationConfig& config);

/// Brute-force oracle for the kriging weights: minimizes w^T w over the
/// affine set F^T w = f(x_j) by explicit null-space parameterization
///   w = w0 + K t,  (K^T K) t = -K^T w0,
/// never touching the Lagrange closed form. Desk scale only: n <= 12.
Eigen::VectorXd oracle_min_weights(const Eigen::VectorXd& abscissas,
                                   const TrendBasis& basis, double x_j);

}  // namespace vanhecke
