#pragma once

#include <span>
#include <vector>

#include "belief/frame.hpp"
#include "belief/mass.hpp"

namespace evidence {

/// Belief and plausibility of every subset, indexed by SubsetKey::index().
///
/// bel(A) sums the masses of the non-empty subsets of A; m(∅) never counts,
/// so bel(Ω) = 1 − m(∅) and pl(A) = bel(Ω) − bel(Ā).
class BeliefView {
 public:
  BeliefView(Frame frame, std::vector<double> bel, std::vector<double> pl);

  const Frame& frame() const { return frame_; }
  double bel(SubsetKey set) const { return bel_.at(set.index()); }
  double pl(SubsetKey set) const { return pl_.at(set.index()); }
  std::span<const double> bel_table() const { return bel_; }
  std::span<const double> pl_table() const { return pl_; }

 private:
  Frame frame_;
  std::vector<double> bel_;
  std::vector<double> pl_;
};

/// Fast zeta transform over the subset lattice, O(n·2ⁿ).
BeliefView belief(const MassFunction& m);

/// In-place subset-sum (zeta) transform: table[A] <- Σ_{B⊆A} table[B].
void subset_zeta(std::span<double> table);
/// In-place inverse (Möbius) transform of subset_zeta.
void subset_moebius(std::span<double> table);

/// Recovers the mass function whose belief function is `bel` (indexed by
/// SubsetKey::index(), bel[∅] = 0). Mass 1 − bel(Ω) goes to ∅; the world is
/// open when that is positive. Throws InvalidInput when a recovered mass is
/// below −1e-9, i.e. `bel` is not a belief function.
MassFunction masses_from_belief(const Frame& frame, std::span<const double> bel);

}  // namespace evidence
