#pragma once

#include <stdexcept>
#include <string>

namespace addtrans {

/// Input outside the mathematical domain of an operation (n = 0, p not
/// dividing n, division by zero, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Index outside a precomputed table's bound.
class RangeError : public std::out_of_range {
 public:
  explicit RangeError(const std::string& what) : std::out_of_range(what) {}
};

/// A table or batch allocation exceeded the available memory budget.
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

/// A general-class function was asked for a value its rule does not define.
class UndefinedValueError : public std::runtime_error {
 public:
  explicit UndefinedValueError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace addtrans
