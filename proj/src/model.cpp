#include "vanhecke/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace vanhecke {

SampleSet::SampleSet(Eigen::VectorXd abscissas, Eigen::VectorXd values)
    : x_(std::move(abscissas)), v_(std::move(values)) {
  if (x_.size() == 0) {
    throw std::invalid_argument("SampleSet: need at least one sample");
  }
  if (x_.size() != v_.size()) {
    throw std::invalid_argument("SampleSet: " + std::to_string(x_.size()) +
                                " abscissas vs " + std::to_string(v_.size()) +
                                " values");
  }
  if (!x_.allFinite() || !v_.allFinite()) {
    throw std::invalid_argument("SampleSet: entries must be finite");
  }
}

Eigen::Index SampleSet::distinct_abscissas() const {
  std::vector<double> sorted(x_.begin(), x_.end());
  std::sort(sorted.begin(), sorted.end());
  return std::unique(sorted.begin(), sorted.end()) - sorted.begin();
}

TrendBasis::TrendBasis(int degree) : degree_(degree) {
  if (degree < 0) {
    throw std::invalid_argument("TrendBasis: degree must be nonnegative");
  }
}

Eigen::VectorXd TrendBasis::eval(double x) const {
  Eigen::VectorXd f(size());
  f[0] = 1.0;
  for (Eigen::Index k = 1; k < f.size(); ++k) {
    f[k] = f[k - 1] * x;
  }
  return f;
}

Eigen::VectorXcd TrendBasis::eval(Complex x) const {
  Eigen::VectorXcd f(size());
  f[0] = Complex(1.0, 0.0);
  for (Eigen::Index k = 1; k < f.size(); ++k) {
    f[k] = f[k - 1] * x;
  }
  return f;
}

DesignMatrix build_design(const Eigen::VectorXd& abscissas, const TrendBasis& basis) {
  if (abscissas.size() == 0) {
    throw std::invalid_argument("build_design: no abscissas");
  }
  std::vector<double> sorted(abscissas.begin(), abscissas.end());
  std::sort(sorted.begin(), sorted.end());
  const auto distinct = std::unique(sorted.begin(), sorted.end()) - sorted.begin();
  if (basis.degree() >= distinct) {
    throw SingularSystemError(
        "design of the degree-" + std::to_string(basis.degree()) +
        " polynomial basis is rank deficient: only " + std::to_string(distinct) +
        " distinct abscissa(s), need at least " + std::to_string(basis.degree() + 1));
  }
  DesignMatrix design(abscissas.size(), basis.size());
  for (Eigen::Index i = 0; i < abscissas.size(); ++i) {
    design.row(i) = basis.eval(abscissas[i]).transpose();
  }
  return design;
}

DesignMatrix build_design(const SampleSet& samples, const TrendBasis& basis) {
  return build_design(samples.abscissas(), basis);
}

MomentSummary moments(const Eigen::VectorXd& abscissas) {
  if (abscissas.size() == 0) {
    throw std::invalid_argument("moments: no abscissas");
  }
  MomentSummary mom;
  mom.m_n = abscissas.mean();
  mom.m_sn = abscissas.squaredNorm() / static_cast<double>(abscissas.size());
  double variance = mom.m_sn - mom.m_n * mom.m_n;
  if (variance < 0.0) {
    // Cauchy-Schwarz guarantees m_sn >= m_n^2; only round-off may undershoot.
    if (-variance >= 1e-12 * std::max(1.0, mom.m_sn)) {
      throw std::logic_error("moments: m_sn - m_n^2 = " + std::to_string(variance) +
                             " is negative beyond round-off");
    }
    variance = 0.0;
  }
  mom.sigma_n = std::sqrt(variance);
  return mom;
}

MomentSummary moments(const SampleSet& samples) {
  return moments(samples.abscissas());
}

}  // namespace vanhecke
