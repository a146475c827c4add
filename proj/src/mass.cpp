#include "belief/mass.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "belief/error.hpp"

namespace evidence {

std::string_view to_string(World world) { return world == World::open ? "open" : "closed"; }

World parse_world(std::string_view text) {
  if (text == "open") return World::open;
  if (text == "closed") return World::closed;
  throw InvalidInput("world must be 'open' or 'closed', got '" + std::string(text) + "'");
}

MassFunction MassFunction::create(Frame frame, std::span<const FocalEntry> entries, World world) {
  std::vector<FocalEntry> focal;
  focal.reserve(entries.size());
  double total = 0.0;
  for (const auto& entry : entries) {
    if (!frame.owns(entry.set)) throw InvalidInput("focal set lies outside the frame");
    if (!std::isfinite(entry.mass) || entry.mass < 0.0) {
      throw InvalidInput("negative or non-finite mass " + std::to_string(entry.mass) + " on " +
                         frame.format(entry.set));
    }
    total += entry.mass;
    focal.push_back(entry);
  }
  std::sort(focal.begin(), focal.end(),
            [](const FocalEntry& a, const FocalEntry& b) { return a.set < b.set; });
  for (std::size_t i = 1; i < focal.size(); ++i) {
    if (focal[i].set == focal[i - 1].set) {
      throw InvalidInput("duplicate focal set " + frame.format(focal[i].set));
    }
  }
  if (std::abs(total - 1.0) > kTolerance) {
    throw InvalidInput("masses sum to " + std::to_string(total) + ", expected 1");
  }
  std::erase_if(focal, [](const FocalEntry& e) { return e.mass == 0.0; });
  for (auto& entry : focal) entry.mass /= total;
  if (world == World::closed && !focal.empty() && focal.front().set.is_empty()) {
    throw InvalidInput("closed-world mass function assigns " + std::to_string(focal.front().mass) +
                       " to the empty set");
  }
  return MassFunction(std::move(frame), std::move(focal), world);
}

MassFunction MassFunction::from_dense(Frame frame, std::span<const double> table, World world) {
  if (table.size() != frame.power_set_size()) throw InvalidInput("dense mass table has the wrong size");
  std::vector<FocalEntry> entries;
  for (std::size_t i = 0; i < table.size(); ++i) {
    double value = table[i];
    if (std::abs(value) < 1e-12) value = 0.0;
    if (value != 0.0) entries.push_back({SubsetKey(static_cast<SubsetKey::Bits>(i)), value});
  }
  return create(std::move(frame), entries, world);
}

MassFunction MassFunction::categorical(Frame frame, SubsetKey set) {
  const FocalEntry entry{set, 1.0};
  const World world = set.is_empty() ? World::open : World::closed;
  return create(std::move(frame), std::span<const FocalEntry>(&entry, 1), world);
}

MassFunction MassFunction::vacuous(Frame frame) {
  const SubsetKey all = frame.full();
  return categorical(std::move(frame), all);
}

double MassFunction::mass(SubsetKey set) const {
  const auto it = std::lower_bound(focal_.begin(), focal_.end(), set,
                                   [](const FocalEntry& e, SubsetKey key) { return e.set < key; });
  return (it != focal_.end() && it->set == set) ? it->mass : 0.0;
}

std::vector<double> MassFunction::dense() const {
  std::vector<double> table(frame_.power_set_size(), 0.0);
  for (const auto& entry : focal_) table[entry.set.index()] = entry.mass;
  return table;
}

bool MassFunction::is_bayesian() const {
  return std::all_of(focal_.begin(), focal_.end(),
                     [](const FocalEntry& e) { return e.set.cardinality() == 1; });
}

double max_abs_difference(const MassFunction& a, const MassFunction& b) {
  require_same_frame(a.frame(), b.frame(), "max_abs_difference");
  const auto da = a.dense();
  const auto db = b.dense();
  double worst = 0.0;
  for (std::size_t i = 0; i < da.size(); ++i) worst = std::max(worst, std::abs(da[i] - db[i]));
  return worst;
}

MassFunction from_counts(const RandomSetCounts& data) {
  if (data.population == 0) throw InvalidInput("population must be positive");
  std::uint64_t total = 0;
  std::vector<FocalEntry> entries;
  entries.reserve(data.counts.size());
  for (const auto& [set, count] : data.counts) {
    if (!data.frame.owns(set)) throw InvalidInput("count attached to a set outside the frame");
    if (set.is_empty() && count > 0) throw InvalidInput("count attached to the empty set");
    total += count;
    entries.push_back({set, static_cast<double>(count) / static_cast<double>(data.population)});
  }
  if (total != data.population) {
    throw InvalidInput("counts sum to " + std::to_string(total) + " but population is " +
                       std::to_string(data.population));
  }
  return MassFunction::create(data.frame, entries, World::closed);
}

MassFunction normalize(const MassFunction& m) {
  const double conflict = m.empty_mass();
  if (conflict >= 1.0 - kTolerance) throw TotalConflict(conflict);
  std::vector<FocalEntry> entries;
  for (const auto& entry : m.focal()) {
    if (!entry.set.is_empty()) entries.push_back({entry.set, entry.mass / (1.0 - conflict)});
  }
  return MassFunction::create(m.frame(), entries, World::closed);
}

}  // namespace evidence
