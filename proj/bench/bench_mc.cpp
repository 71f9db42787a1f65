// Compares the OpenMP Monte Carlo kernel against the serial reference and
// verifies that both produce identical reports.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "vanhecke/monte_carlo.hpp"

namespace {

double time_seconds(const std::function<vanhecke::EmpiricalVarianceReport()>& run,
                    vanhecke::EmpiricalVarianceReport& out) {
  const auto start = std::chrono::steady_clock::now();
  out = run();
  const auto stop = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(stop - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  std::uint64_t max_reps = 3200000;
  if (argc > 1) {
    max_reps = std::strtoull(argv[1], nullptr, 10);
  }

  Eigen::VectorXd abscissas(11);
  abscissas << 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11;
  const vanhecke::TrendBasis basis(1);
  vanhecke::WhiteNoiseModel model;
  model.true_beta = Eigen::Vector2d(1.0, 0.5);
  model.sigma = 1.0;
  const double x_j = 5.5;

#ifdef _OPENMP
  const int threads = omp_get_max_threads();
#else
  const int threads = 1;
#endif
  std::printf("empirical MSE kernel, %d thread(s)\n", threads);
  std::printf("%12s %12s %12s %9s %10s\n", "replicates", "serial [s]",
              "parallel [s]", "speedup", "identical");

  // warmup
  vanhecke::empirical_mse_serial(abscissas, basis, model, x_j,
                                 vanhecke::SimulationConfig{20000, 42});
  vanhecke::empirical_mse(abscissas, basis, model, x_j,
                          vanhecke::SimulationConfig{20000, 42});

  for (std::uint64_t reps = 200000; reps <= max_reps; reps *= 4) {
    const vanhecke::SimulationConfig config{reps, 42};
    vanhecke::EmpiricalVarianceReport serial_report, parallel_report;

    const double serial_s = time_seconds(
        [&] {
          return vanhecke::empirical_mse_serial(abscissas, basis, model, x_j, config);
        },
        serial_report);
    const double parallel_s = time_seconds(
        [&] {
          return vanhecke::empirical_mse(abscissas, basis, model, x_j, config);
        },
        parallel_report);

    const bool identical =
        serial_report.empirical_mse == parallel_report.empirical_mse &&
        serial_report.theoretical_mse == parallel_report.theoretical_mse &&
        serial_report.relative_error == parallel_report.relative_error;
    std::printf("%12llu %12.4f %12.4f %8.2fx %10s\n",
                static_cast<unsigned long long>(reps), serial_s, parallel_s,
                serial_s / parallel_s, identical ? "yes" : "NO");
    if (!identical) {
      return 1;
    }
  }
  return 0;
}
