#pragma once

#include <Eigen/Dense>
#include <utility>

#include "vanhecke/model.hpp"

namespace vanhecke {

/// Estimated regression coefficients, offset first: for a linear trend,
/// coefficients[0] is the offset and coefficients[1] the slope.
struct BlueFit {
  Eigen::VectorXd coefficients;
};

/// Kriging weights and Lagrange multipliers at one evaluation point.
/// The weights satisfy the unbiasedness system F^T w = f(x_j) and the
/// multiplier link w = -F mu (identity noise correlation).
struct KrigingSolution {
  Eigen::VectorXcd weights;      // one per sample
  Eigen::VectorXcd multipliers;  // one per basis function
  Complex x_j;
};

/// White noise: common variance sigma2, identity correlation.
struct NoiseModel {
  double sigma2 = 1.0;
};

/// Complex-valued estimate of an unknown constant mean: the arithmetic mean
/// of the values charged by the imaginary error sigma_n * slope.
struct VanHeckeEstimate {
  double mean = 0.0;              // arithmetic mean of the values
  double signed_imaginary = 0.0;  // sigma_n * slope, positive branch
  double imaginary_error = 0.0;   // |signed_imaginary|
  double standard_error = 0.0;    // population standard error of the mean
};

/// Ordinary least-squares fit: solves the normal equations
/// (F^T F) beta = F^T v through a pivoted LDL^T factorization.
/// Throws SingularSystemError when the design is rank deficient.
BlueFit ols_fit(const SampleSet& samples, const TrendBasis& basis);

/// Minimum-variance unbiased weights at x_j:
///   mu = -(F^T F)^{-1} f(x_j),  w = F (F^T F)^{-1} f(x_j),
/// with f(x_j) evaluated by complex polynomial evaluation and the real
/// Gram factorization applied to real and imaginary parts separately.
KrigingSolution kriging_weights(const Eigen::VectorXd& abscissas,
                                const TrendBasis& basis, Complex x_j);
KrigingSolution kriging_weights(const SampleSet& samples,
                                const TrendBasis& basis, Complex x_j);

/// Weighted estimator sum_l w_l v_l at x_j; by the hat identity it equals
/// f(x_j)^T beta_hat.
Complex predict(const SampleSet& samples, const TrendBasis& basis, Complex x_j);

/// Minimized estimation variance sigma2 * f(x_j)^T (F^T F)^{-1} f(x_j).
/// All quadratic forms are bilinear (plain transposition, never conjugated):
/// that is the analytic continuation under which the variance can vanish at
/// complex evaluation points.
Complex minimized_variance(const Eigen::VectorXd& abscissas, const TrendBasis& basis,
                           Complex x_j, const NoiseModel& noise);
Complex minimized_variance(const SampleSet& samples, const TrendBasis& basis,
                           Complex x_j, const NoiseModel& noise);

/// Linear-trend variance with sigma2 = 1 in closed form:
///   (x_j^2 - 2 m_n x_j + m_sn) / (n sigma_n^2),
/// evaluated as ((x_j - m_n)^2 + sigma_n^2) / (n sigma_n^2) so that the
/// value at the zero-variance points is an exact zero.
/// Throws DegenerateAbscissaError when sigma_n = 0.
Complex normalized_variance_quadratic(const MomentSummary& mom, Eigen::Index n,
                                      Complex x_j);

/// The two complex points m_n +- i sigma_n where the linear-trend variance
/// vanishes; positive-imaginary branch first.
/// Throws DegenerateAbscissaError when sigma_n = 0.
std::pair<Complex, Complex> zero_variance_points(const MomentSummary& mom);

/// Fits the linear trend and evaluates it at the zero-variance points,
/// yielding mean(v) +- i sigma_n * slope. The standard error is the
/// population formula sqrt((mean(v^2) - mean(v)^2) / n).
/// Requires at least two distinct abscissas.
VanHeckeEstimate van_hecke_estimate(const SampleSet& samples);

}  // namespace vanhecke
