#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lvevo {

// Base class for every error thrown by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Trait outside the viable region (or beta <= 1 where beta > 1 is required).
class NotViableError : public Error {
 public:
  using Error::Error;
};

// Exact tie (equal birth rates, equal characteristic ratios, sign tests on a
// boundary). These events have probability zero under the mutation kernels;
// callers inside the evolution processes resample instead of picking a
// convention.
class DegenerateTieError : public Error {
 public:
  using Error::Error;
};

// A denominator or linear system degenerated.
class SingularError : public Error {
 public:
  using Error::Error;
};

// Mutual invadability fails or the candidate interior equilibrium is not
// strictly positive.
class NotCoexistingError : public Error {
 public:
  using Error::Error;
};

// Adaptive step size underflowed.
class StiffnessError : public Error {
 public:
  using Error::Error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Too few data points for an estimator.
class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

// Every replicate of a killed branching run died out.
class ExtinctError : public Error {
 public:
  using Error::Error;
};

// Malformed input file; carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace lvevo
