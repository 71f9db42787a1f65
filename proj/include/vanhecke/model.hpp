#pragma once

#include <Eigen/Dense>
#include <complex>

#include "vanhecke/errors.hpp"

namespace vanhecke {

using Complex = std::complex<double>;

/// One observed signal: real values v_i at real coordinates x_i.
/// Immutable after construction; both vectors have the same length n >= 1
/// and every entry is finite.
class SampleSet {
 public:
  SampleSet(Eigen::VectorXd abscissas, Eigen::VectorXd values);

  Eigen::Index n() const noexcept { return x_.size(); }
  const Eigen::VectorXd& abscissas() const noexcept { return x_; }
  const Eigen::VectorXd& values() const noexcept { return v_; }

  /// Number of distinct abscissa values (exact comparison).
  Eigen::Index distinct_abscissas() const;

 private:
  Eigen::VectorXd x_;
  Eigen::VectorXd v_;
};

/// Polynomial mean-function structure: basis functions 1, x, ..., x^degree.
/// Degree 0 is the constant mean, degree 1 the linear mean with offset and
/// slope.
class TrendBasis {
 public:
  explicit TrendBasis(int degree);

  int degree() const noexcept { return degree_; }

  /// Number of regression parameters (degree + 1).
  Eigen::Index size() const noexcept { return degree_ + 1; }

  /// Basis vector (1, x, ..., x^degree) at a real point.
  Eigen::VectorXd eval(double x) const;

  /// Basis vector at a complex point. Powers are formed by repeated
  /// multiplication, so a real input keeps exactly zero imaginary parts.
  Eigen::VectorXcd eval(Complex x) const;

 private:
  int degree_;
};

/// n x (degree+1) matrix with entry (i, k) = x_i^k.
using DesignMatrix = Eigen::MatrixXd;

/// Builds the design matrix of a polynomial basis over the given abscissas.
/// Throws SingularSystemError when degree >= number of distinct abscissas,
/// since the matrix is then certainly rank deficient.
DesignMatrix build_design(const Eigen::VectorXd& abscissas, const TrendBasis& basis);
DesignMatrix build_design(const SampleSet& samples, const TrendBasis& basis);

/// Abscissa moment summary consumed by the linear-trend formulas:
/// m_n = mean(x_i), m_sn = mean(x_i^2), sigma_n = sqrt(m_sn - m_n^2).
struct MomentSummary {
  double m_n = 0.0;
  double m_sn = 0.0;
  double sigma_n = 0.0;
};

/// Population moments (divisor n). A round-off negative under the square
/// root is clamped to zero when |m_sn - m_n^2| < 1e-12 * max(1, m_sn);
/// anything larger is an internal error.
MomentSummary moments(const Eigen::VectorXd& abscissas);
MomentSummary moments(const SampleSet& samples);

}  // namespace vanhecke
