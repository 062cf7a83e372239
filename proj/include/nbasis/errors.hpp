#ifndef NBASIS_ERRORS_HPP
#define NBASIS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace nbasis {

/// Root of the library's exception hierarchy.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An operation was applied outside its mathematical domain (zero polynomial,
/// zero element, non-square matrix, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Malformed or inconsistent user input.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Raised when an inversion discovers gcd(f, g) nonconstant. `factor()` is the
/// primitive integer gcd, written constant term first.
class ReducibleError : public Error {
 public:
  ReducibleError(const std::string& what, std::string factor)
      : Error(what), factor_(std::move(factor)) {}
  const std::string& factor() const noexcept { return factor_; }

 private:
  std::string factor_;
};

class NotGaloisError : public Error {
 public:
  using Error::Error;
};

class SearchExhausted : public Error {
 public:
  using Error::Error;
};

/// Floating working precision was too low (degenerate Gram-Schmidt, pivot
/// enclosing zero, overlapping root disks). Callers escalate and retry.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

/// A method was asked to run on a field outside its hypotheses.
class DispatchError : public Error {
 public:
  using Error::Error;
};

}  // namespace nbasis

#endif
