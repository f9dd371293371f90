#pragma once

#include <cstddef>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace zolo {

/// A double for an error message, with all 17 digits.
inline std::string message_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the mathematical or numerically supported domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An iterative solve did not reach its tolerance within its budget.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Evaluation hit a pole of a factored rational.
class PoleError : public Error {
 public:
  PoleError(const std::string& what, std::size_t factor_index)
      : Error(what), factor_index_(factor_index) {}

  /// Index into the factor list; npos when the pole comes from the z-power.
  std::size_t factor_index() const noexcept { return factor_index_; }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::size_t factor_index_;
};

/// The sampling grid was too coarse to resolve the equioscillation pattern.
class InsufficientResolution : public Error {
 public:
  using Error::Error;
};

/// No point on the unit circle corresponds to the requested Möbius image.
class BranchError : public Error {
 public:
  using Error::Error;
};

}  // namespace zolo
