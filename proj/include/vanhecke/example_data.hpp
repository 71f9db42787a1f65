#pragma once

#include "vanhecke/model.hpp"

namespace vanhecke {

/// The embedded 11-point reference signal used by the `example` self-test:
/// abscissas 1..11, known results mean 3.29, standard error 0.74 and
/// imaginary error 0.26 at two-decimal rounding.
SampleSet example_signal();

}  // namespace vanhecke
