#pragma once

#include <stdexcept>
#include <string>

namespace wavekin {

// Bad arguments, configuration or file contents.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Non-finite values or a state the numerics cannot continue from.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace wavekin
