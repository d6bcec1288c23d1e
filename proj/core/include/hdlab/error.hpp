#pragma once

#include <stdexcept>
#include <string>

namespace hdlab {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A valuation or lattice could only be resolved as "at least k".
class PrecisionExhausted : public Error {
 public:
  using Error::Error;
};

/// An enumeration would exceed the configured element budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A p-adic value would have to be materialized beyond the digit budget.
class MaterializationError : public Error {
 public:
  using Error::Error;
};

/// Inputs violate a documented precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

}  // namespace hdlab
