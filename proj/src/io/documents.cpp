#include "belief/io/documents.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace evidence::io {

using nlohmann::json;

namespace {

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::exception& e) {
    throw DocumentError(std::string("malformed JSON: ") + e.what());
  }
}

const json& require(const json& object, const char* key, const std::string& where) {
  if (!object.is_object()) throw DocumentError(where + ": expected an object");
  const auto it = object.find(key);
  if (it == object.end()) throw DocumentError(where + ": missing key \"" + key + "\"");
  return *it;
}

Frame parse_frame(const json& doc) {
  const json& labels = require(doc, "frame", "document");
  if (!labels.is_array()) throw DocumentError("frame: expected an array of labels");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!labels[i].is_string()) throw DocumentError("frame[" + std::to_string(i) + "]: expected a string");
    names.push_back(labels[i].get<std::string>());
  }
  try {
    return Frame(std::move(names));
  } catch (const InvalidInput& e) {
    throw DocumentError(std::string("frame: ") + e.what());
  }
}

SubsetKey parse_set(const json& value, const Frame& frame, const std::string& where) {
  if (!value.is_array()) throw DocumentError(where + ": expected an array of labels");
  SubsetKey key;
  for (const auto& label : value) {
    if (!label.is_string()) throw DocumentError(where + ": labels must be strings");
    const auto name = label.get<std::string>();
    SubsetKey element;
    try {
      element = SubsetKey::singleton(frame.index_of(name));
    } catch (const InvalidInput&) {
      throw DocumentError(where + ": unknown label '" + name + "'");
    }
    if (key.intersects(element)) throw DocumentError(where + ": label '" + name + "' repeated");
    key = key | element;
  }
  return key;
}

double parse_number(const json& value, const std::string& where) {
  if (!value.is_number()) throw DocumentError(where + ": expected a number");
  const double x = value.get<double>();
  if (!std::isfinite(x)) throw DocumentError(where + ": not a finite number");
  return x;
}

json set_to_json(const Frame& frame, SubsetKey key) { return frame.members(key); }

std::vector<FlowEntry> parse_entries(const json& doc, const Frame& frame) {
  const json& entries = require(doc, "entries", "document");
  if (!entries.is_array()) throw DocumentError("entries: expected an array");
  std::vector<FlowEntry> out;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const std::string where = "entries[" + std::to_string(i) + "]";
    const json& entry = entries[i];
    FlowEntry flow;
    flow.from = parse_set(require(entry, "from", where), frame, where + ".from");
    flow.to = parse_set(require(entry, "to", where), frame, where + ".to");
    flow.coef = parse_number(require(entry, "coef", where), where + ".coef");
    if (flow.coef < 0.0) throw DocumentError(where + ": negative coefficient");
    out.push_back(flow);
  }
  return out;
}

bool is_transfer(const json& doc) {
  const auto it = doc.find("transfer");
  if (it == doc.end()) return false;
  if (!it->is_boolean()) throw DocumentError("transfer: expected true or false");
  return it->get<bool>();
}

}  // namespace

MassFunction parse_bba(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw DocumentError("document: expected an object");
  Frame frame = parse_frame(doc);

  World world = World::closed;
  if (const auto it = doc.find("world"); it != doc.end()) {
    if (!it->is_string()) throw DocumentError("world: expected \"open\" or \"closed\"");
    try {
      world = parse_world(it->get<std::string>());
    } catch (const InvalidInput& e) {
      throw DocumentError(std::string("world: ") + e.what());
    }
  }

  const json& masses = require(doc, "masses", "document");
  if (!masses.is_array()) throw DocumentError("masses: expected an array");
  std::vector<FocalEntry> entries;
  double total = 0.0;
  for (std::size_t i = 0; i < masses.size(); ++i) {
    const std::string where = "masses[" + std::to_string(i) + "]";
    FocalEntry entry;
    entry.set = parse_set(require(masses[i], "set", where), frame, where + ".set");
    entry.mass = parse_number(require(masses[i], "mass", where), where + ".mass");
    if (entry.mass < 0.0) throw DocumentError(where + ": negative mass " + std::to_string(entry.mass));
    const auto dup = std::find_if(entries.begin(), entries.end(), [&](const FocalEntry& e) { return e.set == entry.set; });
    if (dup != entries.end()) {
      throw DocumentError(where + ": duplicate set " + frame.format(entry.set) + " (first at masses[" +
                          std::to_string(dup - entries.begin()) + "])");
    }
    if (world == World::closed && entry.set.is_empty() && entry.mass > 0.0) {
      throw DocumentError(where + ": positive mass on the empty set in a closed-world document");
    }
    total += entry.mass;
    entries.push_back(entry);
  }
  if (std::abs(total - 1.0) > kTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "masses: sum is " << total << ", expected 1";
    throw DocumentError(msg.str());
  }
  try {
    return MassFunction::create(std::move(frame), entries, world);
  } catch (const InvalidInput& e) {
    throw DocumentError(e.what());
  }
}

std::string serialize_bba(const MassFunction& m) {
  const Frame& frame = m.frame();
  std::vector<FocalEntry> focal(m.focal().begin(), m.focal().end());
  std::sort(focal.begin(), focal.end(), [](const FocalEntry& a, const FocalEntry& b) { return display_less(a.set, b.set); });
  json masses = json::array();
  for (const auto& [set, mass] : focal) masses.push_back({{"set", set_to_json(frame, set)}, {"mass", mass}});
  const json doc = {{"frame", std::vector<std::string>(frame.labels().begin(), frame.labels().end())},
                    {"world", std::string(to_string(m.world()))},
                    {"masses", std::move(masses)}};
  return doc.dump(2) + "\n";
}

SpecializationMatrix parse_specialization(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw DocumentError("document: expected an object");
  if (is_transfer(doc)) throw DocumentError("expected a specialization matrix, got a transfer matrix");
  Frame frame = parse_frame(doc);
  const auto entries = parse_entries(doc, frame);
  try {
    return SpecializationMatrix(std::move(frame), entries);
  } catch (const InvalidInput& e) {
    throw DocumentError(e.what());
  }
}

TransferMatrix parse_transfer(std::string_view text) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw DocumentError("document: expected an object");
  is_transfer(doc);
  Frame frame = parse_frame(doc);
  const auto entries = parse_entries(doc, frame);
  try {
    return TransferMatrix(std::move(frame), entries);
  } catch (const InvalidInput& e) {
    throw DocumentError(e.what());
  }
}

ClosestWorldMap parse_closest(std::string_view text, const Frame& frame) {
  const json doc = parse_json(text);
  if (!doc.is_object()) throw DocumentError("document: expected an object");
  const SubsetKey retained = parse_set(require(doc, "retained", "document"), frame, "retained");
  const json& map = require(doc, "map", "document");
  if (!map.is_object()) throw DocumentError("map: expected an object of label -> label");
  std::vector<std::pair<std::size_t, std::size_t>> targets;
  for (const auto& [from, to] : map.items()) {
    if (!to.is_string()) throw DocumentError("map." + from + ": expected a label");
    try {
      targets.emplace_back(frame.index_of(from), frame.index_of(to.get<std::string>()));
    } catch (const InvalidInput& e) {
      throw DocumentError("map." + from + ": " + e.what());
    }
  }
  try {
    return ClosestWorldMap(frame, retained, targets);
  } catch (const InvalidInput& e) {
    throw DocumentError(e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DocumentError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace evidence::io
