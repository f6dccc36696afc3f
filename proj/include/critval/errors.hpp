#pragma once

#include <stdexcept>
#include <string>

namespace critval {

// Error classes shared by every module. The CLI maps each class to a
// distinct exit code (see cli/commands.hpp).

class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A violated operation precondition that is not a malformed argument per se
// (e.g. an inclusion that was supposed to be an isomorphism but is not).
class PreconditionViolation : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The requested filtration level cannot be certified by the family registry.
class UnsupportedLevel : public DomainError {
 public:
  using DomainError::DomainError;
};

// Sampled data contradicts an invariant the oracle guarantees. Always a bug.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace critval
