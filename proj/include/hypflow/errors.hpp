#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace hypflow {

using cdouble = std::complex<double>;

// Argument outside a function's domain (invalid matrix, tau < 0, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Evaluation requested at (or too close to) a pole.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

// A refinement certificate failed: the result cannot be trusted at the
// requested tolerance. Carries both refinement values.
class AccuracyError : public std::runtime_error {
 public:
  AccuracyError(const std::string& what, cdouble coarse, cdouble fine,
                double estimate)
      : std::runtime_error(what), coarse(coarse), fine(fine),
        estimate(estimate) {}
  cdouble coarse{0.0};
  cdouble fine{0.0};
  double estimate{0.0};
};

// Numerical null space is empty where an eigenfunctional was expected.
class NoEigenfunctionalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input files / configuration (CLI exit code 2).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hypflow
