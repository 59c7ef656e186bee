#pragma once

#include <stdexcept>
#include <string>

namespace rayzeta {

// Bad user input: malformed config, out-of-range parameters, invalid
// character tables. Maps to CLI exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Mathematical hypotheses of a computation are not met (non-reduced
// quadratic irrational, norm not invariant mod q, ...). Exit code 3.
class HypothesisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two independent computations of the same quantity disagree. Exit code 4.
class VerificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rayzeta
