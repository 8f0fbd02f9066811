#pragma once

#include <stdexcept>
#include <string>

namespace chowlab {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed presentation or reference to an unknown generator.
class PresentationError : public Error {
 public:
  using Error::Error;
};

/// Inconsistent parameters (infinite bases, mismatched involutions, ...).
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

/// Caller violated an operation precondition.
class UsageError : public Error {
 public:
  using Error::Error;
};

/// Numeric argument outside the domain of a formula.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed its hard budget.
class ResourceError : public Error {
 public:
  ResourceError(const std::string& what, unsigned long long budget)
      : Error(what), budget_(budget) {}
  unsigned long long budget() const noexcept { return budget_; }

 private:
  unsigned long long budget_;
};

/// A consistency check that must hold by construction failed.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace chowlab
