#include "vanhecke/example_data.hpp"

namespace vanhecke {

SampleSet example_signal() {
  Eigen::VectorXd x(11);
  Eigen::VectorXd v(11);
  x << 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11;
  v << 4.12, 1.38, 5.71, 1.25, 2.24, 0.81, 1.67, 7.42, 7.91, 1.63, 2.05;
  return SampleSet(std::move(x), std::move(v));
}

}  // namespace vanhecke
