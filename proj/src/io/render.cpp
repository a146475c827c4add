#include "belief/io/render.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>

namespace evidence::io {

void RenderedTable::sort_rows() {
  std::stable_sort(rows.begin(), rows.end(), [](const TableRow& a, const TableRow& b) { return display_less(a.set, b.set); });
}

std::string format_percent(double value) {
  // Round half away from zero on the tenth of a percent; the nudge keeps
  // values such as 32.5 from falling to 32.4999... in binary.
  double tenths = std::round(value * 1000.0 + std::copysign(1e-6, value));
  if (tenths == 0.0) tenths = 0.0;  // no "-0.0%"
  std::array<char, 64> buf{};
  const auto result = std::to_chars(buf.data(), buf.data() + buf.size(), tenths / 10.0, std::chars_format::fixed, 1);
  return std::string(buf.data(), result.ptr) + "%";
}

std::string format_fixed(double value, int decimals) {
  std::array<char, 64> buf{};
  const auto result = std::to_chars(buf.data(), buf.data() + buf.size(), value, std::chars_format::fixed, decimals);
  return std::string(buf.data(), result.ptr);
}

void write_tsv(std::ostream& out, const RenderedTable& table) {
  if (!table.title.empty()) out << "# " << table.title << '\n';
  for (const auto& fact : table.facts) {
    out << "# " << fact.name << '\t' << (fact.percent ? format_percent(fact.value) : format_fixed(fact.value, 6)) << '\n';
  }
  for (std::size_t i = 0; i < table.columns.size(); ++i) out << (i ? "\t" : "") << table.columns[i];
  out << '\n';
  for (const auto& row : table.rows) {
    out << row.label;
    for (double value : row.values) out << '\t' << format_percent(value);
    if (!row.note.empty()) out << "\t# " << row.note;
    out << '\n';
  }
}

nlohmann::json to_json(const RenderedTable& table) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json item = {{"set", row.label}};
    for (std::size_t i = 0; i < row.values.size() && i + 1 < table.columns.size(); ++i) {
      item[table.columns[i + 1]] = row.values[i];
    }
    if (!row.note.empty()) item["note"] = row.note;
    rows.push_back(std::move(item));
  }
  nlohmann::json doc = {{"columns", table.columns}, {"rows", std::move(rows)}};
  if (!table.title.empty()) doc["title"] = table.title;
  for (const auto& fact : table.facts) doc[fact.name] = fact.value;
  return doc;
}

RenderedTable interval_table(const BeliefView& view, const std::vector<SubsetKey>& sets) {
  RenderedTable table;
  table.columns = {"set", "lower", "upper"};
  for (SubsetKey set : sets) {
    table.rows.push_back({set, view.frame().format(set), {view.bel(set), view.pl(set)}, {}});
  }
  return table;
}

RenderedTable mass_table(const MassFunction& m) {
  RenderedTable table;
  table.columns = {"set", "mass"};
  for (const auto& [set, mass] : m.focal()) table.rows.push_back({set, m.frame().format(set), {mass}, {}});
  table.sort_rows();
  return table;
}

}  // namespace evidence::io
