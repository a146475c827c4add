#include "belief/combination.hpp"

#include <vector>

#include "belief/error.hpp"

namespace evidence {

MassFunction conjunctive(const MassFunction& m1, const MassFunction& m2) {
  require_same_frame(m1.frame(), m2.frame(), "conjunctive");
  std::vector<double> table(m1.frame().power_set_size(), 0.0);
  for (const auto& [b, mb] : m1.focal()) {
    for (const auto& [c, mc] : m2.focal()) table[(b & c).index()] += mb * mc;
  }
  return MassFunction::from_dense(m1.frame(), table, World::open);
}

ConditioningOutcome dempster_combine(const MassFunction& m1, const MassFunction& m2) {
  const MassFunction joint = conjunctive(m1, m2);
  const double conflict = joint.empty_mass();
  MassFunction result = normalize(joint);
  return {std::move(result), conflict, 1.0 / (1.0 - conflict)};
}

}  // namespace evidence
