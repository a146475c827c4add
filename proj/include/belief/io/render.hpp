#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "belief/frame.hpp"
#include "belief/mass.hpp"
#include "belief/transforms.hpp"

namespace evidence::io {

struct TableRow {
  SubsetKey set;
  std::string label;
  std::vector<double> values;
  /// Trailing annotation, emitted as an extra "# ..." field.
  std::string note;
};

struct Fact {
  std::string name;
  double value = 0.0;
  /// Rendered as a percentage in TSV; otherwise with six decimals.
  bool percent = true;
};

/// A printable table: either (set, lower, upper) or (set, value) rows.
struct RenderedTable {
  std::string title;
  std::vector<std::string> columns;
  std::vector<TableRow> rows;
  /// Extra scalar facts (conflict, normalization constant, ...).
  std::vector<Fact> facts;

  /// Sorts rows by (cardinality, canonical order).
  void sort_rows();
};

/// Percentage with one decimal, e.g. 0.1724 -> "17.2%". Locale independent.
std::string format_percent(double value);

/// Fixed notation with the given number of decimals. Locale independent.
std::string format_fixed(double value, int decimals);

/// Title and facts as "# " comment lines (only when present), then the
/// header and one tab-separated row per set.
void write_tsv(std::ostream& out, const RenderedTable& table);

/// Full-precision JSON rendering.
nlohmann::json to_json(const RenderedTable& table);

/// (set, lower, upper) = (set, bel, pl) rows for the requested sets.
RenderedTable interval_table(const BeliefView& view, const std::vector<SubsetKey>& sets);

/// (set, mass) rows for every focal set.
RenderedTable mass_table(const MassFunction& m);

}  // namespace evidence::io
