#include "belief/transforms.hpp"

#include <cmath>
#include <string>

#include "belief/error.hpp"

namespace evidence {

BeliefView::BeliefView(Frame frame, std::vector<double> bel, std::vector<double> pl)
    : frame_(std::move(frame)), bel_(std::move(bel)), pl_(std::move(pl)) {
  if (bel_.size() != frame_.power_set_size() || pl_.size() != frame_.power_set_size()) {
    throw InvalidInput("belief tables do not match the frame size");
  }
}

void subset_zeta(std::span<double> table) {
  for (std::size_t bit = 1; bit < table.size(); bit <<= 1) {
    for (std::size_t set = 0; set < table.size(); ++set) {
      if (set & bit) table[set] += table[set ^ bit];
    }
  }
}

void subset_moebius(std::span<double> table) {
  for (std::size_t bit = 1; bit < table.size(); bit <<= 1) {
    for (std::size_t set = 0; set < table.size(); ++set) {
      if (set & bit) table[set] -= table[set ^ bit];
    }
  }
}

BeliefView belief(const MassFunction& m) {
  const Frame& frame = m.frame();
  auto bel = m.dense();
  bel[0] = 0.0;
  subset_zeta(bel);

  const std::size_t full = frame.full().index();
  const double total = bel[full];
  std::vector<double> pl(bel.size());
  for (std::size_t set = 0; set < bel.size(); ++set) pl[set] = total - bel[full ^ set];
  pl[0] = 0.0;
  return BeliefView(frame, std::move(bel), std::move(pl));
}

MassFunction masses_from_belief(const Frame& frame, std::span<const double> bel) {
  if (bel.size() != frame.power_set_size()) throw InvalidInput("belief table does not match the frame size");
  if (std::abs(bel[0]) > kTolerance) throw InvalidInput("bel(∅) must be 0");
  for (double value : bel) {
    if (!std::isfinite(value) || value < -kTolerance || value > 1.0 + kTolerance) {
      throw InvalidInput("belief value " + std::to_string(value) + " lies outside [0, 1]");
    }
  }
  std::vector<double> masses(bel.begin(), bel.end());
  masses[0] = 0.0;
  subset_moebius(masses);
  for (std::size_t set = 1; set < masses.size(); ++set) {
    if (masses[set] < -kTolerance) {
      throw InvalidInput("not a belief function: recovered mass " + std::to_string(masses[set]) + " on " +
                         frame.format(SubsetKey(static_cast<SubsetKey::Bits>(set))));
    }
    if (masses[set] < 0.0) masses[set] = 0.0;
  }
  const double empty = 1.0 - bel[frame.full().index()];
  masses[0] = empty > 1e-12 ? empty : 0.0;
  return MassFunction::from_dense(frame, masses, masses[0] > 0.0 ? World::open : World::closed);
}

}  // namespace evidence
