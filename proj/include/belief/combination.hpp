#pragma once

#include "belief/conditioning.hpp"
#include "belief/mass.hpp"

namespace evidence {

/// Unnormalized conjunctive rule: m12(X) = Σ_{B∩C=X} m1(B)·m2(C).
/// Open-world result. Throws InvalidInput when the frames differ.
MassFunction conjunctive(const MassFunction& m1, const MassFunction& m2);

/// Dempster's rule: the conjunctive combination normalized by 1/(1 − k),
/// where k is the conflict (mass on ∅). Throws TotalConflict when k = 1.
ConditioningOutcome dempster_combine(const MassFunction& m1, const MassFunction& m2);

}  // namespace evidence
