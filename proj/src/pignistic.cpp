#include "belief/pignistic.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "belief/error.hpp"

namespace evidence {

Distribution::Distribution(Frame frame, std::vector<double> prob)
    : frame_(std::move(frame)), prob_(std::move(prob)) {
  if (prob_.size() != frame_.size()) throw InvalidInput("distribution size does not match the frame");
  for (double p : prob_) {
    if (!std::isfinite(p) || p < 0.0) throw InvalidInput("probabilities must be non-negative");
  }
  const double total = std::accumulate(prob_.begin(), prob_.end(), 0.0);
  if (std::abs(total - 1.0) > kTolerance) {
    throw InvalidInput("probabilities sum to " + std::to_string(total) + ", expected 1");
  }
}

Distribution Distribution::point(Frame frame, std::size_t index) {
  std::vector<double> prob(frame.size(), 0.0);
  prob.at(index) = 1.0;
  return Distribution(std::move(frame), std::move(prob));
}

Distribution Distribution::uniform(Frame frame) {
  std::vector<double> prob(frame.size(), 1.0 / static_cast<double>(frame.size()));
  return Distribution(std::move(frame), std::move(prob));
}

double Distribution::probability(SubsetKey set) const {
  double total = 0.0;
  for (std::size_t i = 0; i < prob_.size(); ++i) {
    if (set.contains(i)) total += prob_[i];
  }
  return total;
}

PignisticDistribution pignistic(const MassFunction& m) {
  if (m.empty_mass() > 0.0) {
    throw DomainError("pignistic transformation needs m(∅) = 0; got " + std::to_string(m.empty_mass()));
  }
  std::vector<double> prob(m.frame().size(), 0.0);
  for (const auto& [set, mass] : m.focal()) {
    const double share = mass / set.cardinality();
    for (std::size_t i = 0; i < prob.size(); ++i) {
      if (set.contains(i)) prob[i] += share;
    }
  }
  return Distribution(m.frame(), std::move(prob));
}

}  // namespace evidence
