#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "belief/frame.hpp"

namespace evidence {

/// Closed world: the true answer lies in the frame, so m(∅) = 0.
/// Open world: positive mass on ∅ is allowed.
enum class World { open, closed };

std::string_view to_string(World world);
/// Accepts "open" or "closed"; throws InvalidInput otherwise.
World parse_world(std::string_view text);

struct FocalEntry {
  SubsetKey set;
  double mass = 0.0;

  friend bool operator==(const FocalEntry&, const FocalEntry&) = default;
};

/// A basic belief assignment over the subsets of a frame.
///
/// Only focal sets (non-zero mass) are stored, sorted in canonical order.
/// Construction validates non-negativity and that masses sum to 1 within
/// kTolerance, then rescales so the stored masses sum to 1 exactly (up to
/// rounding). Values are immutable once built.
class MassFunction {
 public:
  /// Duplicate sets, sets outside the frame, negative masses, a bad total,
  /// or positive m(∅) under a closed world all throw InvalidInput.
  static MassFunction create(Frame frame, std::span<const FocalEntry> entries, World world);
  static MassFunction create(Frame frame, std::initializer_list<FocalEntry> entries, World world) {
    return create(std::move(frame), std::span<const FocalEntry>(entries.begin(), entries.size()), world);
  }

  /// Builds from a dense table of 2^n masses indexed by SubsetKey::index().
  /// Round-off below 1e-12 in magnitude is flushed to zero.
  static MassFunction from_dense(Frame frame, std::span<const double> table, World world);

  /// Mass 1 on a single set.
  static MassFunction categorical(Frame frame, SubsetKey set);
  /// Mass 1 on the whole frame.
  static MassFunction vacuous(Frame frame);

  const Frame& frame() const { return frame_; }
  World world() const { return world_; }
  std::span<const FocalEntry> focal() const { return focal_; }

  double mass(SubsetKey set) const;
  double empty_mass() const { return mass(SubsetKey::empty()); }
  std::vector<double> dense() const;

  /// True when every focal set is a singleton.
  bool is_bayesian() const;

  friend bool operator==(const MassFunction&, const MassFunction&) = default;

 private:
  MassFunction(Frame frame, std::vector<FocalEntry> focal, World world)
      : frame_(std::move(frame)), focal_(std::move(focal)), world_(world) {}

  Frame frame_;
  std::vector<FocalEntry> focal_;
  World world_;
};

/// Largest absolute per-set mass difference. Frames must match.
double max_abs_difference(const MassFunction& a, const MassFunction& b);

/// Frequency data from a random-set survey: how many respondents named each set.
struct RandomSetCounts {
  Frame frame;
  std::vector<std::pair<SubsetKey, std::uint64_t>> counts;
  std::uint64_t population = 0;
};

/// mass(X) = count(X) / population, closed world. Throws InvalidInput on a
/// zero population, counts that do not sum to the population, counts on ∅,
/// or sets outside the frame.
MassFunction from_counts(const RandomSetCounts& data);

/// Drops m(∅) and rescales the rest by 1/(1 − m(∅)). Throws TotalConflict
/// when m(∅) = 1.
MassFunction normalize(const MassFunction& m);

}  // namespace evidence
