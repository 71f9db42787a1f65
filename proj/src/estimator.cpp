#include "vanhecke/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace vanhecke {

namespace {

// Relative pivot threshold for declaring the Gram matrix singular.
constexpr double kPivotTolerance = 1e-12;

Eigen::LDLT<Eigen::MatrixXd> factor_gram(const DesignMatrix& design,
                                         const TrendBasis& basis) {
  const Eigen::MatrixXd gram = design.transpose() * design;
  Eigen::LDLT<Eigen::MatrixXd> ldlt(gram);
  const Eigen::VectorXd d = ldlt.vectorD();
  const double d_max = d.maxCoeff();
  if (ldlt.info() != Eigen::Success || !(d_max > 0.0) ||
      d.minCoeff() <= kPivotTolerance * d_max) {
    throw SingularSystemError("Gram matrix of the degree-" +
                              std::to_string(basis.degree()) +
                              " polynomial basis is singular");
  }
  return ldlt;
}

// Solve G y = rhs for a complex right-hand side over the real factorization;
// real and imaginary parts decouple, so a real rhs keeps y exactly real.
Eigen::VectorXcd solve_complex(const Eigen::LDLT<Eigen::MatrixXd>& gram,
                               const Eigen::VectorXcd& rhs) {
  const Eigen::VectorXd re = gram.solve(rhs.real());
  const Eigen::VectorXd im = gram.solve(rhs.imag());
  Eigen::VectorXcd y(rhs.size());
  y.real() = re;
  y.imag() = im;
  return y;
}

// Bilinear dot product: sum a_k b_k with no conjugation. std's and Eigen's
// dot() conjugate one side, which would make the variance form Hermitian and
// strictly positive off the real axis.
Complex bilinear(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  return (a.array() * b.array()).sum();
}

}  // namespace

BlueFit ols_fit(const SampleSet& samples, const TrendBasis& basis) {
  const DesignMatrix design = build_design(samples, basis);
  const auto gram = factor_gram(design, basis);
  return BlueFit{gram.solve(design.transpose() * samples.values())};
}

KrigingSolution kriging_weights(const Eigen::VectorXd& abscissas,
                                const TrendBasis& basis, Complex x_j) {
  const DesignMatrix design = build_design(abscissas, basis);
  const auto gram = factor_gram(design, basis);
  const Eigen::VectorXcd y = solve_complex(gram, basis.eval(x_j));

  KrigingSolution solution;
  solution.x_j = x_j;
  solution.multipliers = -y;
  solution.weights.resize(abscissas.size());
  solution.weights.real() = design * y.real();
  solution.weights.imag() = design * y.imag();
  return solution;
}

KrigingSolution kriging_weights(const SampleSet& samples, const TrendBasis& basis,
                                Complex x_j) {
  return kriging_weights(samples.abscissas(), basis, x_j);
}

Complex predict(const SampleSet& samples, const TrendBasis& basis, Complex x_j) {
  const KrigingSolution solution = kriging_weights(samples, basis, x_j);
  return Complex(solution.weights.real().dot(samples.values()),
                 solution.weights.imag().dot(samples.values()));
}

Complex minimized_variance(const Eigen::VectorXd& abscissas, const TrendBasis& basis,
                           Complex x_j, const NoiseModel& noise) {
  const DesignMatrix design = build_design(abscissas, basis);
  const auto gram = factor_gram(design, basis);
  const Eigen::VectorXcd f = basis.eval(x_j);
  return noise.sigma2 * bilinear(f, solve_complex(gram, f));
}

Complex minimized_variance(const SampleSet& samples, const TrendBasis& basis,
                           Complex x_j, const NoiseModel& noise) {
  return minimized_variance(samples.abscissas(), basis, x_j, noise);
}

Complex normalized_variance_quadratic(const MomentSummary& mom, Eigen::Index n,
                                      Complex x_j) {
  if (!(mom.sigma_n > 0.0)) {
    throw DegenerateAbscissaError(
        "normalized variance quadratic: sigma_n = 0 (all abscissas equal)");
  }
  const double sigma_sq = mom.sigma_n * mom.sigma_n;
  // Completed square of x^2 - 2 m_n x + m_sn; cancels exactly at m_n +- i sigma_n.
  const Complex centered = x_j - mom.m_n;
  return (centered * centered + sigma_sq) / (static_cast<double>(n) * sigma_sq);
}

std::pair<Complex, Complex> zero_variance_points(const MomentSummary& mom) {
  if (!(mom.sigma_n > 0.0)) {
    throw DegenerateAbscissaError(
        "zero-variance points: sigma_n = 0 (all abscissas equal)");
  }
  return {Complex(mom.m_n, mom.sigma_n), Complex(mom.m_n, -mom.sigma_n)};
}

VanHeckeEstimate van_hecke_estimate(const SampleSet& samples) {
  if (samples.n() < 2 || samples.distinct_abscissas() < 2) {
    throw DegenerateAbscissaError(
        "van Hecke estimate: need at least two distinct abscissas");
  }
  const MomentSummary mom = moments(samples);
  const BlueFit fit = ols_fit(samples, TrendBasis(1));
  const double n = static_cast<double>(samples.n());

  VanHeckeEstimate estimate;
  estimate.mean = samples.values().mean();
  estimate.signed_imaginary = mom.sigma_n * fit.coefficients[1];
  estimate.imaginary_error = std::abs(estimate.signed_imaginary);
  const double value_variance =
      samples.values().squaredNorm() / n - estimate.mean * estimate.mean;
  estimate.standard_error = std::sqrt(std::max(value_variance, 0.0) / n);
  return estimate;
}

}  // namespace vanhecke
