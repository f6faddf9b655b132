#pragma once

#include <stdexcept>
#include <string>

namespace skewres {

// Input could not be parsed (CLI exit code 2).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input parsed but violates an operation's precondition (exit code 3).
struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// The homology oracle would exceed the configured vertex limit (exit code 4).
struct OracleLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace skewres
