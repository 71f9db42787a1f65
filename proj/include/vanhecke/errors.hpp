#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vanhecke {

// Base class for errors raised by the numerical pipeline, as opposed to
// I/O or usage errors. The CLI maps these to exit code 2.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

// The Gram matrix (or a constraint system) is singular at working precision.
class SingularSystemError : public NumericalError {
 public:
  explicit SingularSystemError(const std::string& what) : NumericalError(what) {}
};

// All abscissas coincide: sigma_n = 0 and the linear-trend operations are
// undefined.
class DegenerateAbscissaError : public NumericalError {
 public:
  explicit DegenerateAbscissaError(const std::string& what) : NumericalError(what) {}
};

// A documented precondition of an operation was violated.
class PreconditionError : public NumericalError {
 public:
  explicit PreconditionError(const std::string& what) : NumericalError(what) {}
};

// CSV input could not be parsed. line() is 1-based; 0 means the error is not
// tied to a particular line (e.g. a missing file).
class CsvError : public std::runtime_error {
 public:
  explicit CsvError(const std::string& what, std::size_t line = 0)
      : std::runtime_error(what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace vanhecke
