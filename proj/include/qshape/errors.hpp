#pragma once

#include <stdexcept>
#include <string>

namespace qshape {

// Argument outside the mathematical domain (q <= 0, x <= 0 for radial models, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// |x ln q| beyond the exponent guard.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// Ladder index outside the bound-state window of a model.
class RangeError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Missing or invalid model / run configuration.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace qshape
