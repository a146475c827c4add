#include <doctest.h>

#include <random>

#include "belief/combination.hpp"
#include "belief/conditioning.hpp"
#include "belief/error.hpp"
#include "../support.hpp"

using namespace evidence;
using namespace evidence::testing;

TEST_CASE("conjunctive combination") {
  const Frame f = voters();
  const SubsetKey cde = f.subset({"c", "d", "e"});
  CHECK(max_abs_difference(conjunctive(MassFunction::vacuous(f), m0()), m0()) < 1e-15);
  CHECK(max_abs_difference(conjunctive(MassFunction::categorical(f, cde), m0()), condition_open(m0(), cde).result) < 1e-15);

  const MassFunction m1 = MassFunction::create(f, {{f.subset({"a", "b"}), 0.5}, {f.subset({"b", "c"}), 0.5}}, World::closed);
  const MassFunction m2 = MassFunction::categorical(f, f.subset({"b"}));
  const MassFunction joint = conjunctive(m1, m2);
  CHECK(joint.mass(f.subset({"b"})) == doctest::Approx(1.0));
  CHECK(joint.world() == World::open);

  CHECK_THROWS_AS(conjunctive(m0(), MassFunction::vacuous(frame_of_size(4))), InvalidInput);
}

TEST_CASE("dempster_combine") {
  const Frame f = voters();
  const SubsetKey cde = f.subset({"c", "d", "e"});
  const auto neutral = dempster_combine(MassFunction::vacuous(f), m0());
  CHECK(max_abs_difference(neutral.result, m0()) < 1e-15);
  CHECK(neutral.conflict == 0.0);

  const auto conditioned = dempster_combine(MassFunction::categorical(f, cde), m0());
  CHECK(max_abs_difference(conditioned.result, condition_closed(m0(), cde).result) < 1e-12);
  CHECK(conditioned.conflict == doctest::Approx(0.13));

  try {
    dempster_combine(MassFunction::categorical(f, f.subset({"a"})), MassFunction::categorical(f, f.subset({"b"})));
    FAIL("expected total conflict");
  } catch (const TotalConflict& e) {
    CHECK(e.conflict() == 1.0);
  }
}

TEST_CASE("combination properties over random triples") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 4)(rng);
    const World world = trial % 2 ? World::open : World::closed;
    const MassFunction m1 = random_mass(rng, 4, world, n);
    const MassFunction m2 = random_mass(rng, 4, World::closed, n);
    const MassFunction m3 = random_mass(rng, 4, world, n);
    const Frame& f = m1.frame();

    const MassFunction m12 = conjunctive(m1, m2);
    CHECK(max_abs(m12.dense(), naive_conjunctive(m1, m2)) < 1e-12);
    CHECK(max_abs_difference(m12, conjunctive(m2, m1)) < 1e-12);
    CHECK(max_abs_difference(conjunctive(m12, m3), conjunctive(m1, conjunctive(m2, m3))) < 1e-12);

    // m12(X) = Σ_Z m1(X | Z) m2(Z), with m1(· | Z) the unnormalized conditioning on Z.
    std::vector<double> via_conditioning(f.power_set_size(), 0.0);
    for (std::uint32_t z = 0; z < f.power_set_size(); ++z) {
      const double weight = m2.mass(SubsetKey(z));
      if (weight == 0.0) continue;
      const auto conditioned = condition_open(m1, SubsetKey(z)).result.dense();
      for (std::size_t x = 0; x < via_conditioning.size(); ++x) via_conditioning[x] += conditioned[x] * weight;
    }
    CHECK(max_abs(m12.dense(), via_conditioning) < 1e-12);

    const SubsetKey a = random_subset(rng, f, false);
    CHECK(max_abs_difference(conjunctive(MassFunction::categorical(f, a), m1), condition_open(m1, a).result) < 1e-12);
  }
}
