#pragma once

#include <map>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "belief/frame.hpp"
#include "belief/mass.hpp"
#include "belief/pignistic.hpp"

namespace evidence {

/// One coefficient of a mass-flow matrix: the share of a source set's mass
/// that moves to `to`.
struct FlowEntry {
  SubsetKey from;
  SubsetKey to;
  double coef = 0.0;
};

namespace detail {

// Row-stochastic sparse matrix keyed by source set. Sources without a row
// keep their mass (identity row).
class StochasticRows {
 public:
  using Row = std::vector<std::pair<SubsetKey, double>>;

  StochasticRows(const Frame& frame, std::span<const FlowEntry> entries, bool subsets_only);

  double coefficient(SubsetKey to, SubsetKey from) const;
  const std::map<SubsetKey, Row>& rows() const { return rows_; }
  std::vector<double> apply(const MassFunction& m) const;

 private:
  std::map<SubsetKey, Row> rows_;
};

}  // namespace detail

/// Specialization coefficients c(B, X): each source set X spreads its mass
/// over its own subsets. c(B, X) = 0 unless B ⊆ X, and every row sums to 1.
class SpecializationMatrix {
 public:
  /// Omitted (from, to) pairs are 0; a source with no entries keeps the
  /// identity row c(X, X) = 1. Throws InvalidInput on negative coefficients,
  /// B ⊄ X, duplicate pairs, or a row sum outside 1 ± kTolerance.
  SpecializationMatrix(Frame frame, std::span<const FlowEntry> entries);
  SpecializationMatrix(Frame frame, std::initializer_list<FlowEntry> entries)
      : SpecializationMatrix(std::move(frame), std::span<const FlowEntry>(entries.begin(), entries.size())) {}

  static SpecializationMatrix identity(Frame frame) { return SpecializationMatrix(std::move(frame), {}); }

  const Frame& frame() const { return frame_; }
  double coefficient(SubsetKey to, SubsetKey from) const { return rows_.coefficient(to, from); }
  const std::map<SubsetKey, detail::StochasticRows::Row>& rows() const { return rows_.rows(); }

 private:
  friend MassFunction apply_specialization(const MassFunction&, const SpecializationMatrix&);
  Frame frame_;
  detail::StochasticRows rows_;
};

/// Transfer coefficients F(B | X): an arbitrary stochastic flow from source
/// X to destination B, without the B ⊆ X restriction.
class TransferMatrix {
 public:
  /// Same defaults and validation as SpecializationMatrix, minus B ⊆ X.
  TransferMatrix(Frame frame, std::span<const FlowEntry> entries);
  TransferMatrix(Frame frame, std::initializer_list<FlowEntry> entries)
      : TransferMatrix(std::move(frame), std::span<const FlowEntry>(entries.begin(), entries.size())) {}

  static TransferMatrix identity(Frame frame) { return TransferMatrix(std::move(frame), {}); }

  const Frame& frame() const { return frame_; }
  double coefficient(SubsetKey to, SubsetKey from) const { return rows_.coefficient(to, from); }
  const std::map<SubsetKey, detail::StochasticRows::Row>& rows() const { return rows_.rows(); }

 private:
  friend MassFunction image_general(const MassFunction&, const TransferMatrix&);
  Frame frame_;
  detail::StochasticRows rows_;
};

/// Lewis's closest-world function n(ω, A): every world is sent to a world
/// of the retained set A, and worlds of A stay where they are.
class ClosestWorldMap {
 public:
  /// `targets` gives n(ω, A) for elements of Ā as (element index, target
  /// index) pairs. Throws InvalidInput when A is empty, an element of Ā has
  /// no target, a target lies outside A, or an element of A is remapped.
  ClosestWorldMap(Frame frame, SubsetKey retained, std::span<const std::pair<std::size_t, std::size_t>> targets);
  ClosestWorldMap(Frame frame, SubsetKey retained, std::initializer_list<std::pair<std::size_t, std::size_t>> targets)
      : ClosestWorldMap(std::move(frame), retained,
                        std::span<const std::pair<std::size_t, std::size_t>>(targets.begin(), targets.size())) {}

  const Frame& frame() const { return frame_; }
  SubsetKey retained() const { return retained_; }
  std::size_t closest(std::size_t element) const { return closest_.at(element); }
  /// {n(ω, A) : ω ∈ X}.
  SubsetKey image(SubsetKey set) const;

 private:
  Frame frame_;
  SubsetKey retained_;
  std::vector<std::size_t> closest_;
};

/// m*(B) = Σ_{X⊇B} c(B, X)·m(X). Result is open-world. Throws InvalidInput on
/// a frame mismatch.
MassFunction apply_specialization(const MassFunction& m, const SpecializationMatrix& s);

enum class SpecializationRule { dempster, geometric };

/// The specialization that realises a named conditioning rule on A:
/// dempster sends X to X ∩ A; geometric keeps subsets of A and sends every
/// other set to ∅.
SpecializationMatrix canonical_specialization(SpecializationRule rule, SubsetKey retained, const Frame& frame);

/// Lewis imaging: each world's probability moves to its closest world in A.
Distribution image_closest(const Distribution& p, const ClosestWorldMap& map);

/// m_A(B) = Σ_X F(B | X)·m(X). Preserves total mass. The result is
/// closed-world unless mass reaches ∅. Throws InvalidInput on frame mismatch.
MassFunction image_general(const MassFunction& m, const TransferMatrix& f);

namespace transfer_rule {
struct DempsterOpen {};
struct YagerKohlas {};
struct Specialization {
  SpecializationMatrix matrix;
};
struct Closest {
  ClosestWorldMap map;
};
}  // namespace transfer_rule

using TransferRule = std::variant<transfer_rule::DempsterOpen, transfer_rule::YagerKohlas,
                                  transfer_rule::Specialization, transfer_rule::Closest>;

/// Expresses a named rule as a transfer matrix, so that image_general
/// reproduces it:
///  - DempsterOpen: F(X ∩ A | X) = 1.
///  - YagerKohlas: F(B | B ∪ Y) = 1 for non-empty B ⊆ A, Y ⊆ Ā; F(A | X) = 1
///    for non-empty X ⊆ Ā.
///  - Specialization: F(B | X) = c(B, X).
///  - Closest: Dempster transfer for sets meeting A; a non-empty X ⊆ Ā goes
///    to its image {n(ω, A) : ω ∈ X}. A is taken from the map.
TransferMatrix transfer_matrix_for(const TransferRule& rule, SubsetKey retained, const Frame& frame);

}  // namespace evidence
