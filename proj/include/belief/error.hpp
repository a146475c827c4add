#pragma once

#include <stdexcept>
#include <string>

namespace evidence {

/// Malformed input: bad labels, frame mismatches, invalid masses or matrices.
class InvalidInput : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A well-formed request that has no answer, e.g. conditioning on an event
/// of zero plausibility.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// All mass landed on the empty set; no normalized counterpart exists.
class TotalConflict : public DomainError {
 public:
  explicit TotalConflict(double conflict)
      : DomainError("total conflict: mass of the empty set is " + std::to_string(conflict)),
        conflict_(conflict) {}

  double conflict() const noexcept { return conflict_; }

 private:
  double conflict_;
};

}  // namespace evidence
