#pragma once

#include <stdexcept>
#include <string>

namespace bohr {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Inconsistent numerical knobs (sample counts, radii, grid sizes).
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Input violates a structural hypothesis the caller promised to satisfy.
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// A numerical routine failed where the mathematics guarantees success.
class SolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bohr
