#pragma once

// Test-only helpers: random generators and brute-force oracles that do not
// share code paths with the library transforms.

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "belief/frame.hpp"
#include "belief/mass.hpp"

namespace evidence::testing {

inline Frame frame_of_size(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
  return Frame(std::move(labels));
}

inline SubsetKey key(std::uint32_t bits) { return SubsetKey(bits); }

inline Frame voters() { return Frame{"a", "b", "c", "d", "e"}; }

/// Monday survey masses, written out literally.
inline MassFunction m0() {
  const Frame f = voters();
  return MassFunction::create(f,
                              {{f.subset({"a"}), 0.05},
                               {f.subset({"a", "b"}), 0.08},
                               {f.subset({"a", "b", "c"}), 0.15},
                               {f.subset({"b", "c", "d"}), 0.21},
                               {f.subset({"a", "b", "c", "d"}), 0.29},
                               {f.subset({"d", "e"}), 0.22}},
                              World::closed);
}

/// Random mass function on a frame of 1..max_n elements. Closed-world
/// functions never put mass on ∅; open-world ones sometimes do.
inline MassFunction random_mass(std::mt19937_64& rng, std::size_t max_n, World world, std::size_t n = 0) {
  if (n == 0) n = std::uniform_int_distribution<std::size_t>(1, max_n)(rng);
  const Frame frame = frame_of_size(n);
  const std::uint32_t sets = 1U << n;
  const std::size_t focal_count = std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(6, sets - 1))(rng);
  std::uniform_int_distribution<std::uint32_t> pick(world == World::closed ? 1 : 0, sets - 1);
  std::uniform_real_distribution<double> weight(0.05, 1.0);
  std::vector<double> table(sets, 0.0);
  for (std::size_t i = 0; i < focal_count; ++i) table[pick(rng)] += weight(rng);
  double total = 0.0;
  for (double w : table) total += w;
  std::vector<FocalEntry> entries;
  for (std::uint32_t s = 0; s < sets; ++s) {
    if (table[s] > 0.0) entries.push_back({SubsetKey(s), table[s] / total});
  }
  return MassFunction::create(frame, entries, world);
}

inline SubsetKey random_subset(std::mt19937_64& rng, const Frame& frame, bool non_empty) {
  std::uniform_int_distribution<std::uint32_t> pick(non_empty ? 1 : 0, static_cast<std::uint32_t>(frame.power_set_size() - 1));
  return SubsetKey(pick(rng));
}

/// bel(A) by direct summation over every non-empty B ⊆ A.
inline double naive_bel(const MassFunction& m, SubsetKey a) {
  double total = 0.0;
  for (std::uint32_t b = 1; b < m.frame().power_set_size(); ++b) {
    if ((b & ~a.bits()) == 0) total += m.mass(SubsetKey(b));
  }
  return total;
}

/// pl(A) by direct summation over every B meeting A.
inline double naive_pl(const MassFunction& m, SubsetKey a) {
  double total = 0.0;
  for (std::uint32_t b = 1; b < m.frame().power_set_size(); ++b) {
    if ((b & a.bits()) != 0) total += m.mass(SubsetKey(b));
  }
  return total;
}

/// Inverse Möbius transform by the explicit alternating sum
/// m(A) = Σ_{B⊆A} (-1)^{|A∖B|} bel(B).
inline std::vector<double> naive_moebius(const std::vector<double>& bel) {
  std::vector<double> m(bel.size(), 0.0);
  for (std::uint32_t a = 0; a < bel.size(); ++a) {
    for (std::uint32_t b = 0; b < bel.size(); ++b) {
      if ((b & ~a) != 0) continue;
      const int sign = (__builtin_popcount(a & ~b) % 2 == 0) ? 1 : -1;
      m[a] += sign * bel[b];
    }
  }
  return m;
}

/// Dense conjunctive combination by enumerating every pair of subsets.
inline std::vector<double> naive_conjunctive(const MassFunction& m1, const MassFunction& m2) {
  const std::size_t size = m1.frame().power_set_size();
  std::vector<double> out(size, 0.0);
  for (std::uint32_t b = 0; b < size; ++b) {
    for (std::uint32_t c = 0; c < size; ++c) out[b & c] += m1.mass(SubsetKey(b)) * m2.mass(SubsetKey(c));
  }
  return out;
}

inline double max_abs(const std::vector<double>& a, const std::vector<double>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

}  // namespace evidence::testing
