#pragma once

#include "belief/frame.hpp"
#include "belief/mass.hpp"

namespace evidence {

/// Result of revising a mass function on the information "the answer is in A".
struct ConditioningOutcome {
  MassFunction result;
  /// Mass that would land on ∅ before any normalization or reallocation.
  double conflict = 0.0;
  /// Factor applied to the surviving masses; 1 for unnormalized rules.
  double normalization = 1.0;
};

/// Unnormalized Dempster conditioning: the mass of X moves to X ∩ A.
/// Always applicable; the result is open-world and conflict = m(∅) + bel(Ā).
ConditioningOutcome condition_open(const MassFunction& m, SubsetKey retained);

/// Dempster conditioning followed by normalization by 1/pl(A). Reduces to
/// P(B ∩ A)/P(A) for Bayesian input. Throws DomainError when pl(A) = 0.
ConditioningOutcome condition_closed(const MassFunction& m, SubsetKey retained);

/// Yager–Kohlas: as condition_open, but the mass that would reach ∅ is given
/// to A instead. Requires a closed-world input (throws InvalidInput otherwise)
/// and a non-empty A (throws DomainError).
ConditioningOutcome condition_yager_kohlas(const MassFunction& m, SubsetKey retained);

/// Geometric rule: masses of subsets of A are kept, every other mass is
/// discarded. The closed variant rescales by 1/bel(A) (DomainError when
/// bel(A) = 0); the open variant moves the discarded mass to ∅.
ConditioningOutcome condition_geometric(const MassFunction& m, SubsetKey retained, World world);

}  // namespace evidence
