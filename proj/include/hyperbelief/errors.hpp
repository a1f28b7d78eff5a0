#pragma once

#include <stdexcept>
#include <string>

namespace hyperbelief {

/// Arithmetic outside the domain of an operation (division by zero, st of an
/// unlimited element, valuation of zero).
struct DomainError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Unknown variable/value, malformed literal or config document.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Mixing events or measures from different outcome spaces.
struct UsageError : std::logic_error {
  using std::logic_error::logic_error;
};

/// Conditioning on an event of probability zero.
struct ConditioningError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Materialization or enumeration beyond the supported size.
struct SizeError : std::length_error {
  using std::length_error::length_error;
};

/// Structurally invalid measure, lexicographic system or order.
struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace hyperbelief
