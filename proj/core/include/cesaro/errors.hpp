#pragma once

#include <stdexcept>
#include <string>

namespace cesaro {

/// Rejected input: bad parameters, malformed files, violated preconditions.
/// The CLI maps this to exit code 2.
class ValidationError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A computation that could not be completed at the requested resolution
/// (e.g. a witness partition that cannot be refined on the given grid).
/// The CLI maps this to exit code 3.
class NumericalError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace cesaro
