#pragma once

#include <stdexcept>
#include <string>

namespace bracketlab {

/// Malformed or inconsistent user input (bad JSON, out-of-range entries,
/// non-unit where a unit is required). The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A condition that the mathematics guarantees cannot happen; seeing one
/// means the implementation is wrong, not the data.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace bracketlab
