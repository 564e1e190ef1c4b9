#pragma once

#include <stdexcept>
#include <string>

namespace comaximal {

/// Malformed or out-of-contract input (bad order, non-prime modulus,
/// non-monic polynomial, mismatched rings, unknown format, ...).
class InvalidArgument : public std::runtime_error {
 public:
  explicit InvalidArgument(const std::string& what) : std::runtime_error(what) {}
};

/// A configured size cap (ring order, graph vertices) would be exceeded.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

/// An exact search exhausted its node budget. The caller gets this error,
/// never an approximate answer.
class BudgetError : public std::runtime_error {
 public:
  explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace comaximal
