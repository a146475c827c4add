#include <doctest.h>

#include <random>
#include <string>

#include "belief/io/documents.hpp"
#include "belief/transforms.hpp"
#include "../support.hpp"

using namespace evidence;
using namespace evidence::testing;
using evidence::io::DocumentError;

namespace {

std::string data(const std::string& name) { return io::read_file(std::string(BELIEF_TEST_DATA) + "/" + name); }

std::string error_of(const std::string& text) {
  try {
    io::parse_bba(text);
  } catch (const DocumentError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("parse_bba reads the survey document") {
  const MassFunction m = io::parse_bba(data("m0.json"));
  CHECK(m.frame() == voters());
  CHECK(m.world() == World::closed);
  CHECK(max_abs_difference(m, m0()) < 1e-15);

  const MassFunction open = io::parse_bba(R"({"frame": ["x", "y"], "world": "open",
      "masses": [{"set": [], "mass": 0.25}, {"set": ["y", "x"], "mass": 0.75}]})");
  CHECK(open.world() == World::open);
  CHECK(open.empty_mass() == 0.25);
  CHECK(open.mass(key(3)) == 0.75);

  // "world" defaults to closed
  CHECK(io::parse_bba(data("only_a.json")).world() == World::closed);
}

TEST_CASE("parse_bba diagnostics") {
  const std::string head = R"({"frame": ["a", "b", "c"], "masses": [)";
  CHECK(error_of(head + R"({"set": ["a"], "mass": 0.5}, {"set": ["b"], "mass": 0.4}]})").find("sum is 0.9") !=
        std::string::npos);
  CHECK(error_of(head + R"({"set": ["a"], "mass": 0.5}, {"set": ["a"], "mass": 0.5}]})").find("masses[1]: duplicate set") !=
        std::string::npos);
  CHECK(error_of(head + R"({"set": ["z"], "mass": 1}]})").find("unknown label 'z'") != std::string::npos);
  CHECK(error_of(head + R"({"set": ["a"], "mass": -0.5}, {"set": ["b"], "mass": 1.5}]})").find("negative mass") !=
        std::string::npos);
  CHECK(error_of(head + R"({"set": [], "mass": 0.5}, {"set": ["b"], "mass": 0.5}]})").find("empty set") !=
        std::string::npos);
  CHECK(error_of(head + R"({"set": ["a"]}]})").find("missing key \"mass\"") != std::string::npos);
  CHECK(error_of(R"({"frame": ["a", "a"], "masses": []})").find("frame") != std::string::npos);
  CHECK(error_of(R"({"frame": ["a"], "world": "closedish", "masses": [{"set": ["a"], "mass": 1}]})") != "");
  CHECK(error_of("{\"frame\": [\"a\"], ").find("malformed JSON") != std::string::npos);
  CHECK(error_of("[]") != "");
}

TEST_CASE("serialize_bba is a fixed point of parse_bba") {
  const std::string text = io::serialize_bba(m0());
  CHECK(text.find("\"world\": \"closed\"") != std::string::npos);
  CHECK(text.back() == '\n');
  const MassFunction back = io::parse_bba(text);
  CHECK(max_abs_difference(back, m0()) < 1e-15);
  CHECK(io::serialize_bba(back) == text);

  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const MassFunction m = random_mass(rng, 5, trial % 3 ? World::closed : World::open);
    const MassFunction again = io::parse_bba(io::serialize_bba(m));
    CHECK(again.world() == m.world());
    CHECK(max_abs_difference(again, m) < 1e-15);
  }
}

TEST_CASE("matrix documents") {
  const SpecializationMatrix s = io::parse_specialization(data("c5_specialization.json"));
  const BeliefView view = belief(apply_specialization(m0(), s));
  const Frame f = voters();
  CHECK(view.bel(f.subset({"c"})) == doctest::Approx(0.22).epsilon(1e-12));
  CHECK(view.pl(f.subset({"c"})) == doctest::Approx(0.435).epsilon(1e-12));

  CHECK_THROWS_AS(io::parse_specialization(data("c6_1_transfer.json")), DocumentError);
  const TransferMatrix t = io::parse_transfer(data("c6_1_transfer.json"));
  CHECK(belief(image_general(m0(), t)).bel(f.subset({"c"})) == doctest::Approx(0.28).epsilon(1e-12));
  CHECK_NOTHROW(io::parse_transfer(data("c5_specialization.json")));

  const ClosestWorldMap map = io::parse_closest(data("closest_c.json"), f);
  CHECK(map.closest(0) == 2);
  CHECK(map.closest(1) == 2);
  CHECK_THROWS_AS(io::parse_closest(R"({"retained": ["c"], "map": {"a": "q", "b": "c"}})", f), DocumentError);
  CHECK_THROWS_AS(io::parse_closest(R"({"retained": ["c", "d", "e"], "map": {"a": "c"}})", f), DocumentError);

  CHECK_THROWS_AS(io::parse_specialization(R"({"frame": ["a", "b"],
      "entries": [{"from": ["a"], "to": ["b"], "coef": 1}]})"), DocumentError);
  CHECK_THROWS_AS(io::parse_transfer(R"({"frame": ["a", "b"], "transfer": true,
      "entries": [{"from": ["a"], "to": ["b"], "coef": 0.7}]})"), DocumentError);
  CHECK_THROWS_AS(io::read_file("/nonexistent/doc.json"), DocumentError);
}
