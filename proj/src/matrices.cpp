#include "belief/matrices.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "belief/error.hpp"

namespace evidence {
namespace detail {

StochasticRows::StochasticRows(const Frame& frame, std::span<const FlowEntry> entries, bool subsets_only) {
  for (const auto& entry : entries) {
    if (!frame.owns(entry.from) || !frame.owns(entry.to)) throw InvalidInput("matrix entry lies outside the frame");
    if (!std::isfinite(entry.coef) || entry.coef < 0.0) {
      throw InvalidInput("negative coefficient for " + frame.format(entry.from) + " -> " + frame.format(entry.to));
    }
    if (subsets_only && !entry.to.is_subset_of(entry.from)) {
      throw InvalidInput("specialization moves mass from " + frame.format(entry.from) + " to non-subset " +
                         frame.format(entry.to));
    }
    auto& row = rows_[entry.from];
    if (std::any_of(row.begin(), row.end(), [&](const auto& cell) { return cell.first == entry.to; })) {
      throw InvalidInput("duplicate entry " + frame.format(entry.from) + " -> " + frame.format(entry.to));
    }
    row.emplace_back(entry.to, entry.coef);
  }
  for (auto& [from, row] : rows_) {
    double total = 0.0;
    for (const auto& cell : row) total += cell.second;
    if (std::abs(total - 1.0) > kTolerance) {
      throw InvalidInput("coefficients leaving " + frame.format(from) + " sum to " + std::to_string(total));
    }
    std::erase_if(row, [](const auto& cell) { return cell.second == 0.0; });
    std::sort(row.begin(), row.end());
  }
}

double StochasticRows::coefficient(SubsetKey to, SubsetKey from) const {
  const auto it = rows_.find(from);
  if (it == rows_.end()) return to == from ? 1.0 : 0.0;
  for (const auto& [dest, coef] : it->second) {
    if (dest == to) return coef;
  }
  return 0.0;
}

std::vector<double> StochasticRows::apply(const MassFunction& m) const {
  std::vector<double> table(m.frame().power_set_size(), 0.0);
  for (const auto& [set, mass] : m.focal()) {
    const auto it = rows_.find(set);
    if (it == rows_.end()) {
      table[set.index()] += mass;
      continue;
    }
    for (const auto& [dest, coef] : it->second) table[dest.index()] += coef * mass;
  }
  return table;
}

}  // namespace detail

SpecializationMatrix::SpecializationMatrix(Frame frame, std::span<const FlowEntry> entries)
    : frame_(std::move(frame)), rows_(frame_, entries, true) {}

TransferMatrix::TransferMatrix(Frame frame, std::span<const FlowEntry> entries)
    : frame_(std::move(frame)), rows_(frame_, entries, false) {}

ClosestWorldMap::ClosestWorldMap(Frame frame, SubsetKey retained,
                                 std::span<const std::pair<std::size_t, std::size_t>> targets)
    : frame_(std::move(frame)), retained_(retained), closest_(frame_.size(), frame_.size()) {
  if (!frame_.owns(retained)) throw InvalidInput("retained set lies outside the frame");
  if (retained.is_empty()) throw InvalidInput("closest-world map needs a non-empty retained set");
  for (std::size_t i = 0; i < frame_.size(); ++i) {
    if (retained.contains(i)) closest_[i] = i;
  }
  for (const auto& [from, to] : targets) {
    if (from >= frame_.size() || to >= frame_.size()) throw InvalidInput("closest-world map index out of range");
    if (!retained.contains(to)) {
      throw InvalidInput("closest world of '" + frame_.label(from) + "' must lie in the retained set, got '" +
                         frame_.label(to) + "'");
    }
    if (retained.contains(from)) {
      if (to != from) throw InvalidInput("retained world '" + frame_.label(from) + "' must map to itself");
      continue;
    }
    if (closest_[from] != frame_.size() && closest_[from] != to) {
      throw InvalidInput("world '" + frame_.label(from) + "' has two closest worlds");
    }
    closest_[from] = to;
  }
  for (std::size_t i = 0; i < frame_.size(); ++i) {
    if (closest_[i] == frame_.size()) throw InvalidInput("world '" + frame_.label(i) + "' has no closest world");
  }
}

SubsetKey ClosestWorldMap::image(SubsetKey set) const {
  SubsetKey out;
  for (std::size_t i = 0; i < closest_.size(); ++i) {
    if (set.contains(i)) out = out | SubsetKey::singleton(closest_[i]);
  }
  return out;
}

MassFunction apply_specialization(const MassFunction& m, const SpecializationMatrix& s) {
  require_same_frame(m.frame(), s.frame(), "apply_specialization");
  return MassFunction::from_dense(m.frame(), s.rows_.apply(m), World::open);
}

SpecializationMatrix canonical_specialization(SpecializationRule rule, SubsetKey retained, const Frame& frame) {
  if (!frame.owns(retained)) throw InvalidInput("retained set lies outside the frame");
  std::vector<FlowEntry> entries;
  for (std::size_t bits = 0; bits < frame.power_set_size(); ++bits) {
    const SubsetKey from(static_cast<SubsetKey::Bits>(bits));
    if (from.is_subset_of(retained)) continue;
    const SubsetKey to = rule == SpecializationRule::dempster ? (from & retained) : SubsetKey::empty();
    entries.push_back({from, to, 1.0});
  }
  return SpecializationMatrix(frame, entries);
}

Distribution image_closest(const Distribution& p, const ClosestWorldMap& map) {
  require_same_frame(p.frame(), map.frame(), "image_closest");
  std::vector<double> out(p.frame().size(), 0.0);
  for (std::size_t i = 0; i < out.size(); ++i) out[map.closest(i)] += p[i];
  return Distribution(p.frame(), std::move(out));
}

MassFunction image_general(const MassFunction& m, const TransferMatrix& f) {
  require_same_frame(m.frame(), f.frame(), "image_general");
  const auto table = f.rows_.apply(m);
  return MassFunction::from_dense(m.frame(), table, table[0] > 0.0 ? World::open : World::closed);
}

namespace {

struct TransferBuilder {
  const Frame& frame;
  SubsetKey retained;

  std::vector<FlowEntry> operator()(const transfer_rule::DempsterOpen&) const {
    std::vector<FlowEntry> entries;
    for_each_outside([&](SubsetKey from) { entries.push_back({from, from & retained, 1.0}); });
    return entries;
  }

  std::vector<FlowEntry> operator()(const transfer_rule::YagerKohlas&) const {
    std::vector<FlowEntry> entries;
    for_each_outside([&](SubsetKey from) {
      const SubsetKey kept = from & retained;
      entries.push_back({from, kept.is_empty() ? retained : kept, 1.0});
    });
    return entries;
  }

  std::vector<FlowEntry> operator()(const transfer_rule::Specialization& rule) const {
    require_same_frame(frame, rule.matrix.frame(), "transfer_matrix_for");
    std::vector<FlowEntry> entries;
    for (const auto& [from, row] : rule.matrix.rows()) {
      for (const auto& [to, coef] : row) entries.push_back({from, to, coef});
    }
    return entries;
  }

  std::vector<FlowEntry> operator()(const transfer_rule::Closest& rule) const {
    require_same_frame(frame, rule.map.frame(), "transfer_matrix_for");
    if (rule.map.retained() != retained) throw InvalidInput("closest-world map retains a different set");
    std::vector<FlowEntry> entries;
    for_each_outside([&](SubsetKey from) {
      const SubsetKey kept = from & retained;
      entries.push_back({from, kept.is_empty() ? rule.map.image(from) : kept, 1.0});
    });
    return entries;
  }

  // Visits every set not contained in A; subsets of A keep identity rows.
  template <typename Fn>
  void for_each_outside(Fn&& fn) const {
    for (std::size_t bits = 0; bits < frame.power_set_size(); ++bits) {
      const SubsetKey from(static_cast<SubsetKey::Bits>(bits));
      if (!from.is_subset_of(retained)) fn(from);
    }
  }
};

}  // namespace

TransferMatrix transfer_matrix_for(const TransferRule& rule, SubsetKey retained, const Frame& frame) {
  if (!frame.owns(retained)) throw InvalidInput("retained set lies outside the frame");
  const auto entries = std::visit(TransferBuilder{frame, retained}, rule);
  return TransferMatrix(frame, entries);
}

}  // namespace evidence
