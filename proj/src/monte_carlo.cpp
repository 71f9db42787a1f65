#include "vanhecke/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "vanhecke/rng.hpp"

namespace vanhecke {

namespace {

// Replicates per accumulation block. Each block's partial sum is formed in
// ascending replicate order and the partials are added in ascending block
// order, so the parallel and serial paths produce the same bit pattern.
constexpr std::uint64_t kBlockSize = 4096;

struct MseKernel {
  Eigen::VectorXd trend;    // f(x_i)^T beta at the sample abscissas
  double trend_j = 0.0;     // f(x_j)^T beta
  Eigen::VectorXd weights;  // kriging weights at x_j
  double sigma = 1.0;
  std::uint64_t seed = 0;

  // Sum of squared prediction errors over replicates [first, last).
  double block_sum(std::uint64_t first, std::uint64_t last) const {
    const Eigen::Index n = trend.size();
    double sum = 0.0;
    for (std::uint64_t r = first; r < last; ++r) {
      SplitMix64 rng(substream_seed(seed, r));
      double predicted = 0.0;
      for (Eigen::Index i = 0; i < n; ++i) {
        predicted += weights[i] * (trend[i] + sigma * rng.next_normal());
      }
      const double v_j = trend_j + sigma * rng.next_normal();
      const double err = v_j - predicted;
      sum += err * err;
    }
    return sum;
  }
};

void check_model(const WhiteNoiseModel& model, const TrendBasis& basis) {
  if (model.true_beta.size() != basis.size()) {
    throw PreconditionError("white noise model: " +
                            std::to_string(model.true_beta.size()) +
                            " trend coefficients for a basis of size " +
                            std::to_string(basis.size()));
  }
  if (!(model.sigma > 0.0)) {
    throw PreconditionError("white noise model: sigma must be positive");
  }
}

MseKernel make_kernel(const Eigen::VectorXd& abscissas, const TrendBasis& basis,
                      const WhiteNoiseModel& model, double x_j,
                      const SimulationConfig& config) {
  check_model(model, basis);
  if (config.replicates == 0) {
    throw PreconditionError("empirical_mse: need at least one replicate");
  }
  for (Eigen::Index i = 0; i < abscissas.size(); ++i) {
    if (abscissas[i] == x_j) {
      throw PreconditionError(
          "empirical_mse: x_j = " + std::to_string(x_j) +
          " coincides with sample abscissa " + std::to_string(i + 1) +
          "; the error decomposition requires an off-sample point");
    }
  }
  MseKernel kernel;
  kernel.trend = build_design(abscissas, basis) * model.true_beta;
  kernel.trend_j = basis.eval(x_j).dot(model.true_beta);
  kernel.weights = kriging_weights(abscissas, basis, Complex(x_j, 0.0)).weights.real();
  kernel.sigma = model.sigma;
  kernel.seed = config.seed;
  return kernel;
}

EmpiricalVarianceReport finalize(const Eigen::VectorXd& abscissas,
                                 const TrendBasis& basis,
                                 const WhiteNoiseModel& model, double x_j,
                                 const SimulationConfig& config,
                                 const std::vector<double>& partials) {
  double total = 0.0;
  for (const double partial : partials) {
    total += partial;
  }
  EmpiricalVarianceReport report;
  report.x_j = x_j;
  report.replicates = config.replicates;
  report.empirical_mse = total / static_cast<double>(config.replicates);
  const double sigma2 = model.sigma * model.sigma;
  const NoiseModel noise{sigma2};
  report.theoretical_mse =
      sigma2 + minimized_variance(abscissas, basis, Complex(x_j, 0.0), noise).real();
  report.relative_error =
      std::abs(report.empirical_mse - report.theoretical_mse) / report.theoretical_mse;
  return report;
}

}  // namespace

SampleSet simulate_field(const Eigen::VectorXd& abscissas, const TrendBasis& basis,
                         const WhiteNoiseModel& model, std::uint64_t seed) {
  check_model(model, basis);
  Eigen::VectorXd values = build_design(abscissas, basis) * model.true_beta;
  SplitMix64 rng(seed);
  for (Eigen::Index i = 0; i < values.size(); ++i) {
    values[i] += model.sigma * rng.next_normal();
  }
  return SampleSet(abscissas, values);
}

EmpiricalVarianceReport empirical_mse(const Eigen::VectorXd& abscissas,
                                      const TrendBasis& basis,
                                      const WhiteNoiseModel& model, double x_j,
                                      const SimulationConfig& config) {
  const MseKernel kernel = make_kernel(abscissas, basis, model, x_j, config);
  const std::uint64_t blocks = (config.replicates + kBlockSize - 1) / kBlockSize;
  std::vector<double> partials(blocks);
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t b = 0; b < static_cast<std::int64_t>(blocks); ++b) {
    const std::uint64_t first = static_cast<std::uint64_t>(b) * kBlockSize;
    const std::uint64_t last = std::min(first + kBlockSize, config.replicates);
    partials[static_cast<std::size_t>(b)] = kernel.block_sum(first, last);
  }
  return finalize(abscissas, basis, model, x_j, config, partials);
}

EmpiricalVarianceReport empirical_mse_serial(const Eigen::VectorXd& abscissas,
                                             const TrendBasis& basis,
                                             const WhiteNoiseModel& model, double x_j,
                                             const SimulationConfig& config) {
  const MseKernel kernel = make_kernel(abscissas, basis, model, x_j, config);
  const std::uint64_t blocks = (config.replicates + kBlockSize - 1) / kBlockSize;
  std::vector<double> partials(blocks);
  for (std::uint64_t b = 0; b < blocks; ++b) {
    const std::uint64_t first = b * kBlockSize;
    const std::uint64_t last = std::min(first + kBlockSize, config.replicates);
    partials[b] = kernel.block_sum(first, last);
  }
  return finalize(abscissas, basis, model, x_j, config, partials);
}

Eigen::VectorXd oracle_min_weights(const Eigen::VectorXd& abscissas,
                                   const TrendBasis& basis, double x_j) {
  if (abscissas.size() > 12) {
    throw PreconditionError("oracle_min_weights: desk-scale oracle, n <= 12");
  }
  const DesignMatrix design = build_design(abscissas, basis);
  const Eigen::MatrixXd constraints = design.transpose();  // F^T, N x n
  const Eigen::VectorXd target = basis.eval(x_j);

  Eigen::FullPivLU<Eigen::MatrixXd> lu(constraints);
  if (lu.rank() < constraints.rows()) {
    throw SingularSystemError(
        "oracle_min_weights: unbiasedness constraints are rank deficient");
  }
  const Eigen::VectorXd particular = lu.solve(target);
  if (lu.dimensionOfKernel() == 0) {
    return particular;  // constraint set is a single point
  }
  const Eigen::MatrixXd kernel = lu.kernel();  // n x (n - N) null-space basis
  const Eigen::VectorXd t = (kernel.transpose() * kernel)
                                .ldlt()
                                .solve(-kernel.transpose() * particular);
  return particular + kernel * t;
}

}  // namespace vanhecke
