#pragma once

#include <stdexcept>

namespace btes {

// Invalid or inconsistent configuration input (bad key, violated invariant).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Invalid argument to an operation (out-of-range id, dimension mismatch).
struct ArgumentError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Inconsistent blocks while building the state-space system.
struct AssemblyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Non-finite values encountered in a numeric routine.
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input file.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace btes
