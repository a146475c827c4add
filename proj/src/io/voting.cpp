#include "belief/io/voting.hpp"

#include <algorithm>
#include <cmath>

#include "belief/conditioning.hpp"
#include "belief/credal.hpp"
#include "belief/error.hpp"
#include "belief/transforms.hpp"

namespace evidence::io::voting {
namespace {

// Dempster transfer X -> X ∩ {c,d,e} for every source except {a} and {a, b},
// whose rows come from `extra`.
TransferMatrix reallocate_undecided(std::vector<FlowEntry> extra) {
  const Frame frame = candidates();
  const SubsetKey kept = survivors();
  const SubsetKey only_a = frame.subset({"a"});
  const SubsetKey a_or_b = frame.subset({"a", "b"});
  for (std::size_t bits = 0; bits < frame.power_set_size(); ++bits) {
    const SubsetKey from(static_cast<SubsetKey::Bits>(bits));
    if (from.is_subset_of(kept) || from == only_a || from == a_or_b) continue;
    extra.push_back({from, from & kept, 1.0});
  }
  return TransferMatrix(frame, extra);
}

RenderedTable interval_rows(const MassFunction& m, std::initializer_list<std::initializer_list<std::string_view>> sets) {
  const BeliefView view = belief(m);
  std::vector<SubsetKey> keys;
  for (auto set : sets) keys.push_back(m.frame().subset(set));
  RenderedTable table = interval_table(view, keys);
  table.sort_rows();
  return table;
}

const std::initializer_list<std::initializer_list<std::string_view>> kConditionedRows = {
    {"c"}, {"d"}, {"c", "d"}, {"c", "d", "e"}};

RenderedTable table_2() {
  RenderedTable t = interval_rows(monday_masses(), {{"a"}, {"a", "b"}, {"a", "b", "c"}, {"c"}, {"d"}, {"c", "d"}, {"c", "d", "e"}});
  t.title = "table 2: lower and upper proportions of the Monday survey";
  return t;
}

RenderedTable table_c1() {
  const auto outcome = condition_open(monday_masses(), survivors());
  RenderedTable t = interval_rows(outcome.result, kConditionedRows);
  t.title = "table c1: unnormalized Dempster conditioning on {c, d, e}";
  t.facts.push_back({"conflict", outcome.conflict});
  return t;
}

RenderedTable table_c2() {
  const auto outcome = condition_closed(monday_masses(), survivors());
  RenderedTable t = interval_rows(outcome.result, kConditionedRows);
  t.title = "table c2: normalized Dempster conditioning on {c, d, e}";
  t.facts.push_back({"conflict", outcome.conflict});
  t.facts.push_back({"normalization", outcome.normalization, false});
  return t;
}

RenderedTable table_c3() {
  const auto outcome = condition_yager_kohlas(monday_masses(), survivors());
  RenderedTable t = interval_rows(outcome.result, kConditionedRows);
  t.title = "table c3: Yager-Kohlas conditioning on {c, d, e}";
  t.facts.push_back({"reallocated", outcome.conflict});
  return t;
}

RenderedTable table_c4() {
  const auto outcome = condition_geometric(monday_masses(), survivors(), World::closed);
  RenderedTable t = interval_rows(outcome.result, {{"c", "d"}, {"d", "e"}});
  t.title = "table c4: geometric conditioning on {c, d, e}";
  t.facts.push_back({"discarded", outcome.conflict});
  t.facts.push_back({"normalization", outcome.normalization, false});
  return t;
}

RenderedTable table_c5() {
  const MassFunction result = apply_specialization(monday_masses(), reconsidered_answers());
  RenderedTable t = interval_rows(result, kConditionedRows);
  t.title = "table c5: specialization on {c, d, e}";
  t.facts.push_back({"conflict", result.empty_mass()});
  return t;
}

RenderedTable imaging_table(const TransferMatrix& matrix, std::string title) {
  RenderedTable t = interval_rows(image_general(monday_masses(), matrix), kConditionedRows);
  t.title = std::move(title);
  return t;
}

RenderedTable table_c7() {
  const MassFunction m = monday_masses();
  const Frame& frame = m.frame();
  RenderedTable t;
  t.title = "table c7: lower and upper conditional proportions given {c, d, e}";
  t.columns = {"set", "lower", "upper"};
  for (auto set : {frame.subset({"c"}), frame.subset({"d"}), frame.subset({"c", "d"}), frame.subset({"d", "e"})}) {
    const IntervalBound closed_form = fh_conditional(m, survivors(), set);
    const IntervalBound exact = oracle_conditional(m, survivors(), set);
    TableRow row{set, frame.format(set), {closed_form.lower, closed_form.upper}, {}};
    if (std::abs(closed_form.lower - exact.lower) > kTolerance || std::abs(closed_form.upper - exact.upper) > kTolerance) {
      row.note = "vertex oracle gives [" + format_percent(exact.lower) + ", " + format_percent(exact.upper) + "]";
    } else if (set == frame.subset({"c"})) {
      row.note = "erratum: published upper value is 100.0%";
    }
    t.rows.push_back(std::move(row));
  }
  t.sort_rows();
  return t;
}

}  // namespace

Frame candidates() { return Frame{"a", "b", "c", "d", "e"}; }

RandomSetCounts monday_counts() {
  const Frame frame = candidates();
  return RandomSetCounts{frame,
                         {{frame.subset({"a"}), 5},
                          {frame.subset({"a", "b"}), 8},
                          {frame.subset({"a", "b", "c"}), 15},
                          {frame.subset({"b", "c", "d"}), 21},
                          {frame.subset({"a", "b", "c", "d"}), 29},
                          {frame.subset({"d", "e"}), 22}},
                         100};
}

MassFunction monday_masses() { return from_counts(monday_counts()); }

SubsetKey survivors() { return candidates().subset({"c", "d", "e"}); }

SpecializationMatrix reconsidered_answers() {
  const Frame f = candidates();
  const double third = 1.0 / 3.0;
  return SpecializationMatrix(f, {
                                     {f.subset({"a"}), {}, 1.0},
                                     {f.subset({"a", "b"}), {}, 1.0},
                                     {f.subset({"a", "b", "c"}), f.subset({"c"}), 1.0},
                                     {f.subset({"b", "c", "d"}), f.subset({"c"}), third},
                                     {f.subset({"b", "c", "d"}), f.subset({"d"}), third},
                                     {f.subset({"b", "c", "d"}), f.subset({"c", "d"}), third},
                                     {f.subset({"a", "b", "c", "d"}), f.subset({"d"}), 0.5},
                                     {f.subset({"a", "b", "c", "d"}), f.subset({"c", "d"}), 0.5},
                                     {f.subset({"d", "e"}), f.subset({"d"}), 0.5},
                                     {f.subset({"d", "e"}), f.subset({"e"}), 0.5},
                                 });
}

TransferMatrix closest_candidate() {
  const Frame f = candidates();
  return reallocate_undecided({{f.subset({"a"}), f.subset({"c"}), 1.0}, {f.subset({"a", "b"}), f.subset({"c"}), 1.0}});
}

TransferMatrix split_reallocation() {
  const Frame f = candidates();
  return reallocate_undecided({{f.subset({"a"}), f.subset({"c"}), 0.4},
                               {f.subset({"a"}), f.subset({"c", "d"}), 0.6},
                               {f.subset({"a", "b"}), f.subset({"c"}), 0.4},
                               {f.subset({"a", "b"}), f.subset({"c", "d"}), 0.6}});
}

TransferMatrix per_answer_reallocation() {
  const Frame f = candidates();
  return reallocate_undecided({{f.subset({"a"}), f.subset({"c"}), 0.4},
                               {f.subset({"a"}), f.subset({"c", "d"}), 0.6},
                               {f.subset({"a", "b"}), f.subset({"c"}), 0.5},
                               {f.subset({"a", "b"}), f.subset({"c", "d"}), 0.25},
                               {f.subset({"a", "b"}), f.subset({"c", "e"}), 0.25}});
}

const std::vector<std::string>& table_selectors() {
  static const std::vector<std::string> selectors = {"2", "c1", "c2", "c3", "c4", "c5", "c6.1", "c6.2", "c6.3", "c7"};
  return selectors;
}

std::vector<RenderedTable> demo_tables(std::string_view selector) {
  const auto& all = table_selectors();
  if (selector != "all" && std::find(all.begin(), all.end(), selector) == all.end()) {
    throw InvalidInput("unknown table '" + std::string(selector) + "'");
  }
  std::vector<RenderedTable> tables;
  const auto wanted = [&](std::string_view name) { return selector == "all" || selector == name; };
  if (wanted("2")) tables.push_back(table_2());
  if (wanted("c1")) tables.push_back(table_c1());
  if (wanted("c2")) tables.push_back(table_c2());
  if (wanted("c3")) tables.push_back(table_c3());
  if (wanted("c4")) tables.push_back(table_c4());
  if (wanted("c5")) tables.push_back(table_c5());
  if (wanted("c6.1")) tables.push_back(imaging_table(closest_candidate(), "table c6.1: undecided voters move to c"));
  if (wanted("c6.2")) {
    tables.push_back(imaging_table(split_reallocation(), "table c6.2: undecided voters split between {c} and {c, d}"));
  }
  if (wanted("c6.3")) {
    tables.push_back(imaging_table(per_answer_reallocation(), "table c6.3: undecided voters reallocated per answer"));
  }
  if (wanted("c7")) tables.push_back(table_c7());
  return tables;
}

}  // namespace evidence::io::voting
