#pragma once

#include <cstddef>
#include <cstdint>
#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace evidence {

/// Comparison tolerance used throughout the library.
inline constexpr double kTolerance = 1e-9;

/// Largest supported frame.
inline constexpr std::size_t kMaxFrameSize = 16;

/// A subset of a frame, encoded as a bitmask over element indices.
/// Bit i set means element i is a member. The numeric value of the mask is
/// the canonical order.
class SubsetKey {
 public:
  using Bits = std::uint32_t;

  constexpr SubsetKey() = default;
  constexpr explicit SubsetKey(Bits bits) : bits_(bits) {}

  static constexpr SubsetKey empty() { return SubsetKey{}; }
  static constexpr SubsetKey singleton(std::size_t index) {
    return SubsetKey{Bits{1} << index};
  }
  static constexpr SubsetKey full(std::size_t n) {
    return SubsetKey{n >= 32 ? ~Bits{0} : (Bits{1} << n) - 1};
  }

  constexpr Bits bits() const { return bits_; }
  constexpr bool is_empty() const { return bits_ == 0; }
  constexpr bool contains(std::size_t index) const { return (bits_ >> index) & 1U; }
  int cardinality() const;

  constexpr bool is_subset_of(SubsetKey other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(SubsetKey other) const { return (bits_ & other.bits_) != 0; }

  /// Complement relative to a frame of n elements.
  constexpr SubsetKey complement(std::size_t n) const {
    return SubsetKey{~bits_ & full(n).bits_};
  }

  friend constexpr SubsetKey operator&(SubsetKey a, SubsetKey b) { return SubsetKey{a.bits_ & b.bits_}; }
  friend constexpr SubsetKey operator|(SubsetKey a, SubsetKey b) { return SubsetKey{a.bits_ | b.bits_}; }
  friend constexpr auto operator<=>(SubsetKey, SubsetKey) = default;

  /// Dense table index.
  constexpr std::size_t index() const { return bits_; }

 private:
  Bits bits_ = 0;
};

/// Order used for all rendered output: cardinality first, then canonical.
bool display_less(SubsetKey a, SubsetKey b);

/// A frame of discernment: an ordered list of distinct element labels.
class Frame {
 public:
  /// Throws InvalidInput on empty/duplicate labels or more than kMaxFrameSize elements.
  explicit Frame(std::vector<std::string> labels);
  Frame(std::initializer_list<std::string> labels) : Frame(std::vector<std::string>(labels)) {}

  std::size_t size() const { return labels_.size(); }
  /// Number of subsets, 2^n.
  std::size_t power_set_size() const { return std::size_t{1} << labels_.size(); }
  std::span<const std::string> labels() const { return labels_; }
  const std::string& label(std::size_t index) const { return labels_.at(index); }

  /// Index of a label; throws InvalidInput for unknown labels.
  std::size_t index_of(std::string_view label) const;

  SubsetKey full() const { return SubsetKey::full(size()); }
  SubsetKey complement(SubsetKey key) const { return key.complement(size()); }
  bool owns(SubsetKey key) const { return key.is_subset_of(full()); }

  /// Builds a key from labels. Duplicates collapse; unknown labels throw.
  SubsetKey subset(std::span<const std::string> labels) const;
  SubsetKey subset(std::initializer_list<std::string_view> labels) const;

  /// Parses a comma-separated label list ("c,d,e"). Whitespace around labels
  /// is ignored; the empty string yields the empty set.
  SubsetKey parse_subset(std::string_view literal) const;

  std::vector<std::string> members(SubsetKey key) const;

  /// "{a, b}" style, "{}" for the empty set.
  std::string format(SubsetKey key) const;

  friend bool operator==(const Frame&, const Frame&) = default;

 private:
  std::vector<std::string> labels_;
};

/// Throws InvalidInput unless the two frames are identical.
void require_same_frame(const Frame& a, const Frame& b, std::string_view context);

/// All subsets of a frame sorted by display order.
std::vector<SubsetKey> subsets_in_display_order(const Frame& frame);

}  // namespace evidence
