#pragma once

#include <string>
#include <string_view>

#include "belief/error.hpp"
#include "belief/frame.hpp"
#include "belief/mass.hpp"
#include "belief/matrices.hpp"

namespace evidence::io {

/// A document that is not valid JSON or does not follow its schema.
class DocumentError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// Parses
///   {"frame": [...], "world": "closed"|"open", "masses": [{"set": [...], "mass": x}, ...]}
/// "world" defaults to "closed". ∅ is written as "set": [].
MassFunction parse_bba(std::string_view text);

/// Inverse of parse_bba; focal sets in display order, full-precision masses.
std::string serialize_bba(const MassFunction& m);

/// {"frame": [...], "entries": [{"from": [...], "to": [...], "coef": x}, ...]}
/// Rejects documents flagged "transfer": true.
SpecializationMatrix parse_specialization(std::string_view text);

/// Same shape as a specialization document, usually with "transfer": true;
/// destinations need not be subsets of their sources.
TransferMatrix parse_transfer(std::string_view text);

/// {"retained": [...], "map": {"a": "c", ...}}, interpreted over `frame`.
ClosestWorldMap parse_closest(std::string_view text, const Frame& frame);

/// Reads a whole file; throws DocumentError when it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace evidence::io
