#include "belief/frame.hpp"

#include <algorithm>
#include <bit>
#include <unordered_set>

#include "belief/error.hpp"

namespace evidence {

int SubsetKey::cardinality() const { return std::popcount(bits_); }

bool display_less(SubsetKey a, SubsetKey b) {
  const int ca = a.cardinality();
  const int cb = b.cardinality();
  if (ca != cb) return ca < cb;
  return a < b;
}

Frame::Frame(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw InvalidInput("frame must contain at least one element");
  if (labels_.size() > kMaxFrameSize) {
    throw InvalidInput("frame has " + std::to_string(labels_.size()) + " elements; at most " +
                       std::to_string(kMaxFrameSize) + " are supported");
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& label : labels_) {
    if (label.empty()) throw InvalidInput("frame labels must be non-empty");
    if (!seen.insert(label).second) throw InvalidInput("duplicate frame label '" + label + "'");
  }
}

std::size_t Frame::index_of(std::string_view label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw InvalidInput("unknown label '" + std::string(label) + "'");
  return static_cast<std::size_t>(it - labels_.begin());
}

SubsetKey Frame::subset(std::span<const std::string> labels) const {
  SubsetKey key;
  for (const auto& label : labels) key = key | SubsetKey::singleton(index_of(label));
  return key;
}

SubsetKey Frame::subset(std::initializer_list<std::string_view> labels) const {
  SubsetKey key;
  for (auto label : labels) key = key | SubsetKey::singleton(index_of(label));
  return key;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

}  // namespace

SubsetKey Frame::parse_subset(std::string_view literal) const {
  SubsetKey key;
  if (trim(literal).empty()) return key;
  std::size_t start = 0;
  while (true) {
    const auto comma = literal.find(',', start);
    const auto token = trim(literal.substr(start, comma == std::string_view::npos ? literal.npos : comma - start));
    if (token.empty()) throw InvalidInput("empty label in set literal '" + std::string(literal) + "'");
    key = key | SubsetKey::singleton(index_of(token));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return key;
}

std::vector<std::string> Frame::members(SubsetKey key) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (key.contains(i)) out.push_back(labels_[i]);
  }
  return out;
}

std::string Frame::format(SubsetKey key) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < size(); ++i) {
    if (!key.contains(i)) continue;
    if (!first) out += ", ";
    out += labels_[i];
    first = false;
  }
  out += "}";
  return out;
}

void require_same_frame(const Frame& a, const Frame& b, std::string_view context) {
  if (!(a == b)) throw InvalidInput(std::string(context) + ": frame mismatch");
}

std::vector<SubsetKey> subsets_in_display_order(const Frame& frame) {
  std::vector<SubsetKey> keys;
  keys.reserve(frame.power_set_size());
  for (std::size_t bits = 0; bits < frame.power_set_size(); ++bits) {
    keys.emplace_back(static_cast<SubsetKey::Bits>(bits));
  }
  std::sort(keys.begin(), keys.end(), display_less);
  return keys;
}

}  // namespace evidence
