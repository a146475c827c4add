#include "belief/credal.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "belief/error.hpp"
#include "belief/transforms.hpp"

namespace evidence {
namespace {

void require_closed(const MassFunction& m, const char* operation) {
  if (m.world() == World::open || m.empty_mass() > 0.0) {
    throw InvalidInput(std::string(operation) + " requires a closed-world mass function");
  }
}

// Vertices closer than this in every coordinate are treated as one.
constexpr double kVertexTolerance = 1e-12;

bool same_vertex(std::span<const double> a, std::span<const double> b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::abs(a[i] - b[i]) > kVertexTolerance) return false;
  }
  return true;
}

}  // namespace

IntervalBound bounds(const MassFunction& m, SubsetKey set) {
  require_closed(m, "bounds");
  if (!m.frame().owns(set)) throw InvalidInput("set lies outside the frame");
  const BeliefView view = belief(m);
  return {view.bel(set), view.pl(set)};
}

std::vector<CredalVertex> credal_vertices(const MassFunction& m) {
  require_closed(m, "credal_vertices");
  const std::size_t n = m.frame().size();
  if (n > kMaxCredalFrameSize) {
    throw InvalidInput("vertex enumeration supports at most " + std::to_string(kMaxCredalFrameSize) +
                       " elements, frame has " + std::to_string(n));
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<std::size_t> rank(n);
  std::vector<std::vector<double>> found;
  do {
    for (std::size_t pos = 0; pos < n; ++pos) rank[order[pos]] = pos;
    std::vector<double> prob(n, 0.0);
    for (const auto& [set, mass] : m.focal()) {
      std::size_t best = n;
      for (std::size_t i = 0; i < n; ++i) {
        if (set.contains(i) && (best == n || rank[i] < rank[best])) best = i;
      }
      prob[best] += mass;
    }
    if (std::none_of(found.begin(), found.end(), [&](const auto& v) { return same_vertex(v, prob); })) {
      found.push_back(std::move(prob));
    }
  } while (std::next_permutation(order.begin(), order.end()));

  std::vector<CredalVertex> vertices;
  vertices.reserve(found.size());
  for (auto& prob : found) vertices.emplace_back(m.frame(), std::move(prob));
  return vertices;
}

IntervalBound oracle_conditional(const MassFunction& m, SubsetKey given, SubsetKey query) {
  if (!m.frame().owns(given) || !m.frame().owns(query)) throw InvalidInput("set lies outside the frame");
  const auto vertices = credal_vertices(m);
  IntervalBound out{1.0, 0.0};
  bool any = false;
  for (const auto& v : vertices) {
    const double denominator = v.probability(given);
    if (denominator <= kVertexTolerance) continue;
    const double ratio = v.probability(given & query) / denominator;
    out.lower = std::min(out.lower, ratio);
    out.upper = std::max(out.upper, ratio);
    any = true;
  }
  if (!any) {
    throw DomainError("conditional on " + m.frame().format(given) + " is undefined over the whole credal set");
  }
  return out;
}

IntervalBound fh_conditional(const MassFunction& m, SubsetKey given, SubsetKey query) {
  require_closed(m, "fh_conditional");
  const Frame& frame = m.frame();
  if (!frame.owns(given) || !frame.owns(query)) throw InvalidInput("set lies outside the frame");
  const BeliefView view = belief(m);
  if (view.pl(given) <= kTolerance) {
    throw DomainError("no solution: pl(" + frame.format(given) + ") = " + std::to_string(view.pl(given)));
  }
  const SubsetKey inside = given & query;
  const SubsetKey outside = given & frame.complement(query);

  IntervalBound out;
  const double lower_den = view.bel(inside) + view.pl(outside);
  const double upper_den = view.pl(inside) + view.bel(outside);
  if (lower_den > kTolerance && upper_den > kTolerance) {
    out.lower = view.bel(inside) / lower_den;
    out.upper = view.pl(inside) / upper_den;
    return out;
  }
  // 0/0 on one side: the closed form is silent, the credal set decides.
  const IntervalBound exact = oracle_conditional(m, given, query);
  out.lower = lower_den > kTolerance ? view.bel(inside) / lower_den : exact.lower;
  out.upper = upper_den > kTolerance ? view.pl(inside) / upper_den : exact.upper;
  return out;
}

}  // namespace evidence
