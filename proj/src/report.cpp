#include "vanhecke/report.hpp"

#include <cstdio>
#include <nlohmann/json.hpp>
#include <sstream>

namespace vanhecke {

namespace {

std::string fixed(double value, int digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*f", digits, value);
  return buffer;
}

}  // namespace

EstimateReport make_estimate_report(const SampleSet& samples) {
  const VanHeckeEstimate estimate = van_hecke_estimate(samples);
  const BlueFit fit = ols_fit(samples, TrendBasis(1));
  const MomentSummary mom = moments(samples);

  EstimateReport report;
  report.mean = estimate.mean;
  report.imaginary_error = estimate.imaginary_error;
  report.standard_error = estimate.standard_error;
  report.offset = fit.coefficients[0];
  report.slope = fit.coefficients[1];
  report.zero_variance_points = zero_variance_points(mom);
  report.n = samples.n();
  return report;
}

nlohmann::json to_json(Complex z) {
  return nlohmann::json{{"re", z.real()}, {"im", z.imag()}};
}

nlohmann::json to_json(const EstimateReport& report) {
  return nlohmann::json{
      {"n", report.n},
      {"mean", report.mean},
      {"standard_error", report.standard_error},
      {"imaginary_error", report.imaginary_error},
      {"slope", report.slope},
      {"offset", report.offset},
      {"zero_variance_points",
       {to_json(report.zero_variance_points.first),
        to_json(report.zero_variance_points.second)}},
  };
}

nlohmann::json to_json(const EmpiricalVarianceReport& report) {
  return nlohmann::json{
      {"x_j", report.x_j},
      {"empirical_mse", report.empirical_mse},
      {"theoretical_mse", report.theoretical_mse},
      {"relative_error", report.relative_error},
      {"replicates", report.replicates},
  };
}

std::string render_text(const EstimateReport& report, int digits) {
  const Complex zero_plus = report.zero_variance_points.first;
  std::ostringstream out;
  out << "n                    " << report.n << "\n"
      << "mean                 " << fixed(report.mean, digits) << "\n"
      << "standard error       +/- " << fixed(report.standard_error, digits) << "\n"
      << "imaginary error      +/- " << fixed(report.imaginary_error, digits) << "\n"
      << "slope                " << fixed(report.slope, digits) << "\n"
      << "offset               " << fixed(report.offset, digits) << "\n"
      << "zero-variance x_j    " << fixed(zero_plus.real(), digits) << " +/- "
      << fixed(zero_plus.imag(), digits) << "i\n";
  return out.str();
}

std::string render_text(const EmpiricalVarianceReport& report, int digits) {
  std::ostringstream out;
  out << "x_j                  " << fixed(report.x_j, digits) << "\n"
      << "replicates           " << report.replicates << "\n"
      << "empirical MSE        " << fixed(report.empirical_mse, digits) << "\n"
      << "theoretical MSE      " << fixed(report.theoretical_mse, digits) << "\n"
      << "relative error       " << fixed(report.relative_error, digits) << "\n";
  return out.str();
}

}  // namespace vanhecke
