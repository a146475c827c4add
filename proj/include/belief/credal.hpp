#pragma once

#include <vector>

#include "belief/frame.hpp"
#include "belief/mass.hpp"
#include "belief/pignistic.hpp"

namespace evidence {

/// A lower/upper probability (or proportion) pair.
struct IntervalBound {
  double lower = 0.0;
  double upper = 1.0;
};

/// Extreme point of the credal set of a belief function.
using CredalVertex = Distribution;

/// Largest frame accepted by the permutation-based vertex enumeration.
inline constexpr std::size_t kMaxCredalFrameSize = 7;

/// [bel(A), pl(A)]. Throws InvalidInput on open-world input.
IntervalBound bounds(const MassFunction& m, SubsetKey set);

/// Extreme points of {P : bel ≤ P ≤ pl}. For every ordering of the elements,
/// each focal set gives its mass to its first member in that order; the
/// distinct allocations are returned in the order first encountered.
/// Throws InvalidInput for open-world input or frames larger than
/// kMaxCredalFrameSize.
std::vector<CredalVertex> credal_vertices(const MassFunction& m);

/// Lower/upper conditional probability of B given A over the credal set, in
/// closed form:
///   lower = bel(A∩B) / (bel(A∩B) + pl(A∩B̄))
///   upper = pl(A∩B)  / (pl(A∩B)  + bel(A∩B̄))
/// A side whose denominator vanishes is settled by the vertex oracle.
/// Throws DomainError when pl(A) = 0, InvalidInput for open-world input.
IntervalBound fh_conditional(const MassFunction& m, SubsetKey given, SubsetKey query);

/// Lower/upper of v(A∩B)/v(A) over the credal vertices with v(A) > 0.
/// Throws DomainError when no vertex gives A positive probability.
IntervalBound oracle_conditional(const MassFunction& m, SubsetKey given, SubsetKey query);

}  // namespace evidence
