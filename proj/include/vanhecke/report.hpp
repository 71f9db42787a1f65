#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>
#include <utility>

#include "vanhecke/estimator.hpp"
#include "vanhecke/monte_carlo.hpp"

namespace vanhecke {

/// Everything the `estimate` command reports for one signal.
struct EstimateReport {
  double mean = 0.0;
  double imaginary_error = 0.0;
  double standard_error = 0.0;
  double slope = 0.0;
  double offset = 0.0;
  std::pair<Complex, Complex> zero_variance_points;
  Eigen::Index n = 0;
};

EstimateReport make_estimate_report(const SampleSet& samples);

nlohmann::json to_json(Complex z);
nlohmann::json to_json(const EstimateReport& report);
nlohmann::json to_json(const EmpiricalVarianceReport& report);

/// Human-readable rendering; `digits` controls presentation rounding only.
std::string render_text(const EstimateReport& report, int digits);
std::string render_text(const EmpiricalVarianceReport& report, int digits);

}  // namespace vanhecke
