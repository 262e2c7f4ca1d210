#pragma once

#include <stdexcept>
#include <string>

namespace lrkit {

/// Malformed or out-of-range user input (bad shape, non-semistandard filling,
/// entries beyond the alphabet). The CLI maps this to exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An operation was called outside its documented domain.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace lrkit
