#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "vanhecke/csv.hpp"
#include "vanhecke/errors.hpp"
#include "vanhecke/estimator.hpp"
#include "vanhecke/example_data.hpp"
#include "vanhecke/model.hpp"
#include "vanhecke/monte_carlo.hpp"
#include "vanhecke/report.hpp"

namespace {

using vanhecke::Complex;

// Exit codes: 0 success, 1 usage or parse error, 2 numerical error
// (singular or degenerate input), 3 self-test mismatch.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitSelfTest = 3;

std::string format_real(double value, int significant) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*g", significant, value);
  return buffer;
}

std::string format_complex(Complex z, int significant) {
  const char sign = z.imag() < 0 ? '-' : '+';
  return format_real(z.real(), significant) + " " + sign + " " +
         format_real(std::abs(z.imag()), significant) + "i";
}

Complex point_from(const std::vector<double>& at) {
  return Complex(at.at(0), at.size() > 1 ? at[1] : 0.0);
}

int cmd_estimate(const std::string& csv_path, bool json, int digits) {
  const vanhecke::SampleSet samples = vanhecke::read_samples(csv_path);
  const vanhecke::EstimateReport report = vanhecke::make_estimate_report(samples);
  if (json) {
    std::cout << vanhecke::to_json(report).dump(2) << "\n";
  } else {
    std::cout << vanhecke::render_text(report, digits);
  }
  return kExitOk;
}

int cmd_weights(const std::string& csv_path, const std::vector<double>& at,
                int degree, bool json) {
  const vanhecke::SampleSet samples = vanhecke::read_samples(csv_path);
  const vanhecke::TrendBasis basis(degree);
  const Complex x_j = point_from(at);
  const vanhecke::KrigingSolution solution =
      vanhecke::kriging_weights(samples, basis, x_j);

  // Residuals of the unbiasedness system F^T w = f(x_j).
  const vanhecke::DesignMatrix design = vanhecke::build_design(samples, basis);
  const Eigen::VectorXcd residual =
      design.transpose().cast<Complex>() * solution.weights - basis.eval(x_j);

  if (json) {
    nlohmann::json out{
        {"x_j", vanhecke::to_json(x_j)},
        {"degree", degree},
        {"n", samples.n()},
    };
    for (Eigen::Index i = 0; i < solution.weights.size(); ++i) {
      out["weights"].push_back(vanhecke::to_json(solution.weights[i]));
    }
    for (Eigen::Index k = 0; k < solution.multipliers.size(); ++k) {
      out["multipliers"].push_back(vanhecke::to_json(solution.multipliers[k]));
    }
    for (Eigen::Index k = 0; k < residual.size(); ++k) {
      out["constraint_residuals"].push_back(std::abs(residual[k]));
    }
    std::cout << out.dump(2) << "\n";
    return kExitOk;
  }

  std::printf("kriging weights at x_j = %s (degree %d, n = %td)\n",
              format_complex(x_j, 9).c_str(), degree,
              static_cast<std::ptrdiff_t>(samples.n()));
  std::printf("%6s %14s %20s %20s\n", "i", "x_i", "Re(w)", "Im(w)");
  for (Eigen::Index i = 0; i < solution.weights.size(); ++i) {
    std::printf("%6td %14.6g %20.12g %20.12g\n", static_cast<std::ptrdiff_t>(i + 1),
                samples.abscissas()[i], solution.weights[i].real(),
                solution.weights[i].imag());
  }
  std::printf("%6s %35s %20s\n", "k", "Re(mu)", "Im(mu)");
  for (Eigen::Index k = 0; k < solution.multipliers.size(); ++k) {
    std::printf("%6td %35.12g %20.12g\n", static_cast<std::ptrdiff_t>(k),
                solution.multipliers[k].real(), solution.multipliers[k].imag());
  }
  for (Eigen::Index k = 0; k < residual.size(); ++k) {
    std::printf("constraint residual |sum_i w_i x_i^%td - x_j^%td| = %.3g\n",
                static_cast<std::ptrdiff_t>(k), static_cast<std::ptrdiff_t>(k),
                std::abs(residual[k]));
  }
  return kExitOk;
}

int cmd_variance(const std::string& csv_path, const std::vector<double>& at,
                 double sigma2, int degree, bool json) {
  const vanhecke::SampleSet samples = vanhecke::read_samples(csv_path);
  const Complex x_j = point_from(at);
  const Complex variance = vanhecke::minimized_variance(
      samples, vanhecke::TrendBasis(degree), x_j, vanhecke::NoiseModel{sigma2});
  if (json) {
    nlohmann::json out{
        {"x_j", vanhecke::to_json(x_j)},
        {"sigma2", sigma2},
        {"degree", degree},
        {"variance", vanhecke::to_json(variance)},
    };
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "minimized variance at x_j = " << format_complex(x_j, 9) << ": "
              << format_complex(variance, 6) << "\n";
  }
  return kExitOk;
}

int cmd_simulate(int n, const std::vector<double>& beta, double sigma, double at,
                 std::uint64_t reps, std::uint64_t seed, bool serial, bool json) {
  Eigen::VectorXd abscissas(n);
  for (int i = 0; i < n; ++i) {
    abscissas[i] = i + 1;
  }
  vanhecke::WhiteNoiseModel model;
  model.true_beta = Eigen::Map<const Eigen::VectorXd>(beta.data(), beta.size());
  model.sigma = sigma;
  const vanhecke::TrendBasis basis(static_cast<int>(beta.size()) - 1);
  const vanhecke::SimulationConfig config{reps, seed};
  const vanhecke::EmpiricalVarianceReport report =
      serial ? vanhecke::empirical_mse_serial(abscissas, basis, model, at, config)
             : vanhecke::empirical_mse(abscissas, basis, model, at, config);
  if (json) {
    std::cout << vanhecke::to_json(report).dump(2) << "\n";
  } else {
    std::cout << vanhecke::render_text(report, 6);
  }
  return kExitOk;
}

int cmd_example(bool json) {
  const vanhecke::EstimateReport report =
      vanhecke::make_estimate_report(vanhecke::example_signal());
  if (json) {
    std::cout << vanhecke::to_json(report).dump(2) << "\n";
  } else {
    std::cout << vanhecke::render_text(report, 2);
  }

  // Self-test: the embedded signal must reproduce the known two-decimal
  // values exactly.
  const struct {
    const char* name;
    double actual;
    const char* expected;
  } checks[] = {
      {"mean", report.mean, "3.29"},
      {"standard error", report.standard_error, "0.74"},
      {"imaginary error", report.imaginary_error, "0.26"},
  };
  for (const auto& check : checks) {
    char rendered[32];
    std::snprintf(rendered, sizeof rendered, "%.2f", check.actual);
    if (std::string(rendered) != check.expected) {
      std::cerr << "self-test mismatch: " << check.name << " = " << rendered
                << ", expected " << check.expected << "\n";
      return kExitSelfTest;
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Best linear unbiased estimation for signals with a polynomial trend "
      "over white noise, including the complex zero-variance evaluation "
      "points and the resulting van Hecke mean estimate."};
  app.require_subcommand(1);

  std::string csv_path;
  std::vector<double> at;
  std::vector<double> beta{1.0, 0.5};
  double sigma2 = 1.0;
  double sigma = 1.0;
  double sim_at = 5.5;
  int degree = 1;
  int digits = 2;
  int sim_n = 11;
  std::uint64_t reps = 10000;
  std::uint64_t seed = 0;
  bool json = false;
  bool serial = false;

  CLI::App* estimate = app.add_subcommand(
      "estimate", "Van Hecke estimate of the constant mean of a CSV signal");
  estimate->add_option("csv", csv_path, "input file with header x,v")->required();
  estimate->add_flag("--json", json, "emit JSON at full precision");
  estimate->add_option("--digits", digits, "decimal digits in text output")
      ->default_val(2);

  CLI::App* weights = app.add_subcommand(
      "weights", "kriging weights and multipliers at an evaluation point");
  weights->add_option("csv", csv_path, "input file with header x,v")->required();
  weights->add_option("--at", at, "evaluation point RE[,IM]")
      ->required()
      ->delimiter(',')
      ->expected(1, 2);
  weights->add_option("--degree", degree, "polynomial trend degree")->default_val(1);
  weights->add_flag("--json", json, "emit JSON at full precision");

  CLI::App* variance = app.add_subcommand(
      "variance", "minimized estimation variance at an evaluation point");
  variance->add_option("csv", csv_path, "input file with header x,v")->required();
  variance->add_option("--at", at, "evaluation point RE[,IM]")
      ->required()
      ->delimiter(',')
      ->expected(1, 2);
  variance->add_option("--sigma2", sigma2, "noise variance")->default_val(1.0);
  variance->add_option("--degree", degree, "polynomial trend degree")->default_val(1);
  variance->add_flag("--json", json, "emit JSON at full precision");

  CLI::App* simulate = app.add_subcommand(
      "simulate", "Monte Carlo check of the prediction error at a point");
  simulate->add_option("--n", sim_n, "number of samples at abscissas 1..n")
      ->default_val(11);
  simulate->add_option("--beta", beta, "trend coefficients, offset first")
      ->delimiter(',')
      ->expected(1, 16);
  simulate->add_option("--sigma", sigma, "noise standard deviation")->default_val(1.0);
  simulate->add_option("--at", sim_at, "real evaluation point")->default_val(5.5);
  simulate->add_option("--reps", reps, "number of replicates")->default_val(10000);
  simulate->add_option("--seed", seed, "RNG seed")->default_val(0);
  simulate->add_flag("--serial", serial, "use the serial reference kernel");
  simulate->add_flag("--json", json, "emit JSON at full precision");

  CLI::App* example = app.add_subcommand(
      "example", "run the embedded reference signal as a self-test");
  example->add_flag("--json", json, "emit JSON at full precision");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (estimate->parsed()) {
      return cmd_estimate(csv_path, json, digits);
    }
    if (weights->parsed()) {
      return cmd_weights(csv_path, at, degree, json);
    }
    if (variance->parsed()) {
      return cmd_variance(csv_path, at, sigma2, degree, json);
    }
    if (simulate->parsed()) {
      return cmd_simulate(sim_n, beta, sigma, sim_at, reps, seed, serial, json);
    }
    return cmd_example(json);
  } catch (const vanhecke::CsvError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const vanhecke::NumericalError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
}
