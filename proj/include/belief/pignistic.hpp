#pragma once

#include <span>
#include <vector>

#include "belief/frame.hpp"
#include "belief/mass.hpp"

namespace evidence {

/// A probability distribution over the elements of a frame.
class Distribution {
 public:
  /// Throws InvalidInput on negative entries, a size mismatch, or a total
  /// outside 1 ± kTolerance.
  Distribution(Frame frame, std::vector<double> prob);

  static Distribution point(Frame frame, std::size_t index);
  static Distribution uniform(Frame frame);

  const Frame& frame() const { return frame_; }
  double operator[](std::size_t index) const { return prob_.at(index); }
  std::span<const double> values() const { return prob_; }

  /// Probability of a set, by additivity.
  double probability(SubsetKey set) const;

 private:
  Frame frame_;
  std::vector<double> prob_;
};

using PignisticDistribution = Distribution;

/// BetP(ω) = Σ_{X∋ω} m(X)/|X|. Requires m(∅) = 0; throws DomainError
/// otherwise (normalize first).
PignisticDistribution pignistic(const MassFunction& m);

}  // namespace evidence
