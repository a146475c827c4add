#pragma once

#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "belief/error.hpp"
#include "belief/mass.hpp"

namespace evidence::io {

/// Bad command line: unknown subcommand, missing or malformed options.
class UsageError : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

enum class OutputFormat { tsv, json };

/// A fully parsed command line. Set literals are kept as text until the
/// input frame is known.
struct CommandRequest {
  std::string subcommand;  // bel, condition, specialize, image, combine, betp, credal, demo
  std::string input;       // --in
  std::string second_input;  // --in2
  std::string matrix;      // --matrix
  std::string closest;     // --closest
  std::string rule;        // condition: c1|c2|c3|geometric; credal: fh|oracle
  std::optional<std::string> retain;
  std::vector<std::string> queries;
  std::optional<World> world;
  OutputFormat format = OutputFormat::tsv;
  bool normalize = false;
  bool show_masses = false;
  std::string table = "all";  // demo voting --table
};

/// Exit statuses.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Parses command-line arguments (program name excluded). Throws UsageError.
/// Returns nullopt when help was requested and printed to `out`.
std::optional<CommandRequest> parse_command_line(std::span<const std::string> args, std::ostream& out);

/// Executes a request. Returns 0 on success, 1 on domain errors (no solution,
/// total conflict, rule not applicable), 2 on unreadable or invalid input
/// documents and bad set literals. Diagnostics go to `err`.
int execute(const CommandRequest& request, std::ostream& out, std::ostream& err);

/// parse_command_line + execute.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace evidence::io
