#include "belief/conditioning.hpp"

#include <string>
#include <vector>

#include "belief/error.hpp"

namespace evidence {
namespace {

void require_owned(const MassFunction& m, SubsetKey retained) {
  if (!m.frame().owns(retained)) throw InvalidInput("conditioning set lies outside the frame");
}

// Dempster transfer; returns the dense table of m_A.
std::vector<double> transfer_to_intersection(const MassFunction& m, SubsetKey retained) {
  std::vector<double> table(m.frame().power_set_size(), 0.0);
  for (const auto& [set, mass] : m.focal()) table[(set & retained).index()] += mass;
  return table;
}

}  // namespace

ConditioningOutcome condition_open(const MassFunction& m, SubsetKey retained) {
  require_owned(m, retained);
  const auto table = transfer_to_intersection(m, retained);
  const double conflict = table[0];
  return {MassFunction::from_dense(m.frame(), table, World::open), conflict, 1.0};
}

ConditioningOutcome condition_closed(const MassFunction& m, SubsetKey retained) {
  require_owned(m, retained);
  auto table = transfer_to_intersection(m, retained);
  const double conflict = table[0];
  // pl(A) = total mass transferred to non-empty subsets of A.
  const double plausibility = 1.0 - conflict;
  if (plausibility <= kTolerance) {
    throw DomainError("no solution: pl(" + m.frame().format(retained) + ") = " + std::to_string(plausibility));
  }
  table[0] = 0.0;
  for (double& value : table) value /= plausibility;
  return {MassFunction::from_dense(m.frame(), table, World::closed), conflict, 1.0 / plausibility};
}

ConditioningOutcome condition_yager_kohlas(const MassFunction& m, SubsetKey retained) {
  require_owned(m, retained);
  if (m.world() == World::open || m.empty_mass() > 0.0) {
    throw InvalidInput("Yager-Kohlas conditioning applies only to closed-world mass functions");
  }
  if (retained.is_empty()) throw DomainError("no solution: Yager-Kohlas conditioning on the empty set");
  auto table = transfer_to_intersection(m, retained);
  const double conflict = table[0];
  table[retained.index()] += conflict;
  table[0] = 0.0;
  return {MassFunction::from_dense(m.frame(), table, World::closed), conflict, 1.0};
}

ConditioningOutcome condition_geometric(const MassFunction& m, SubsetKey retained, World world) {
  require_owned(m, retained);
  std::vector<double> table(m.frame().power_set_size(), 0.0);
  double kept = 0.0;  // bel(A)
  for (const auto& [set, mass] : m.focal()) {
    if (set.is_subset_of(retained)) {
      table[set.index()] = mass;
      if (!set.is_empty()) kept += mass;
    }
  }
  const double conflict = 1.0 - kept;
  if (world == World::open) {
    table[0] = conflict;
    return {MassFunction::from_dense(m.frame(), table, World::open), conflict, 1.0};
  }
  if (kept <= kTolerance) {
    throw DomainError("no solution: bel(" + m.frame().format(retained) + ") = " + std::to_string(kept));
  }
  table[0] = 0.0;
  for (double& value : table) value /= kept;
  return {MassFunction::from_dense(m.frame(), table, World::closed), conflict, 1.0 / kept};
}

}  // namespace evidence
