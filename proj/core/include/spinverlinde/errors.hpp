#pragma once

#include <stdexcept>
#include <string>

namespace spinverlinde {

/// Operands live in spaces of different dimension.
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive enumeration was requested past its configured cap.
class CapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// A dimension formula produced a non-integral or negative value.
/// The message names every input and the level convention in force.
class IntegralityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Two independent routes to the same quantity disagreed.
class IdentityViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Interval evaluation could not isolate an integer below the precision ceiling.
class PrecisionCeilingExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A level value outside its lattice, or a conversion the lattice forbids.
class LevelError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace spinverlinde
