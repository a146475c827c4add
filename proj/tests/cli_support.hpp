#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "belief/io/documents.hpp"
#include "belief/io/run.hpp"

namespace evidence::testing {

struct CliResult {
  int status = -1;
  std::string out;
  std::string err;
};

inline CliResult cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  CliResult r;
  r.status = io::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

inline std::string data_path(const std::string& name) { return std::string(BELIEF_TEST_DATA) + "/" + name; }

inline std::string golden_text() { return io::read_file(BELIEF_GOLDEN_ALL); }

/// One mutation of a valid document: truncation, byte flips, insertions or
/// token swaps that break the JSON or the schema.
inline std::string mutate(const std::string& doc, std::mt19937_64& rng) {
  static const std::vector<std::pair<std::string, std::string>> swaps = {
      {"0.22", "-0.22"}, {"0.05", "0.5"},     {"\"d\", \"e\"", "\"d\", \"z\""},
      {"\"masses\"", "\"mass\""}, {"\"frame\"", "\"frames\""}, {"\"closed\"", "\"ajar\""},
      {"0.15", "\"0.15\""}, {"[\"a\"]", "[\"a\", \"a\"]"}, {"0.29", "1e400"},
      {"[\"a\", \"b\"]", "[\"a\"]"},  {"0.08", "null"}, {"0.21", "0.21, \"extra\": 1"}};
  std::string text = doc;
  std::uniform_int_distribution<int> kind(0, 3);
  switch (kind(rng)) {
    case 0:
      text.resize(std::uniform_int_distribution<std::size_t>(0, text.size() - 2)(rng));
      break;
    case 1: {
      const std::string junk = "{}[],:\"x-0";
      const std::size_t pos = std::uniform_int_distribution<std::size_t>(0, text.size() - 1)(rng);
      text.insert(pos, 1, junk[std::uniform_int_distribution<std::size_t>(0, junk.size() - 1)(rng)]);
      break;
    }
    case 2: {
      const std::size_t pos = std::uniform_int_distribution<std::size_t>(0, text.size() - 1)(rng);
      text[pos] = static_cast<char>(std::uniform_int_distribution<int>(0, 255)(rng));
      break;
    }
    default: {
      const auto& [from, to] = swaps[std::uniform_int_distribution<std::size_t>(0, swaps.size() - 1)(rng)];
      if (const auto at = text.find(from); at != std::string::npos) text.replace(at, from.size(), to);
      break;
    }
  }
  return text;
}

/// Runs `bel` on `count` mutated copies of the survey document. Mutants that
/// still parse as a valid mass function are skipped; returns the number of
/// malformed documents that exited 0 and reports how many were tried.
inline int fuzz_malformed(int count, std::uint64_t seed, int& tried) {
  const std::string original = io::read_file(data_path("m0.json"));
  const std::string path = std::string(BELIEF_FUZZ_DIR) + "/fuzz_" + std::to_string(seed) + ".json";
  std::mt19937_64 rng(seed);
  int escaped = 0;
  tried = 0;
  for (int i = 0; i < count; ++i) {
    const std::string text = mutate(original, rng);
    bool valid = true;
    try {
      io::parse_bba(text);
    } catch (const InvalidInput&) {
      valid = false;
    }
    if (valid) continue;
    ++tried;
    std::ofstream(path, std::ios::binary) << text;
    if (cli({"bel", "--in", path}).status == io::kExitOk) ++escaped;
  }
  return escaped;
}

}  // namespace evidence::testing
