#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "belief/frame.hpp"
#include "belief/mass.hpp"
#include "belief/matrices.hpp"
#include "belief/io/render.hpp"

namespace evidence::io::voting {

/// Candidates a..e.
Frame candidates();

/// Monday survey: 100 voters, each naming the set of candidates they might vote for.
RandomSetCounts monday_counts();

/// Mass function of the Monday survey.
MassFunction monday_masses();

/// Surviving candidates {c, d, e}.
SubsetKey survivors();

/// Redistribution of undecided voters among surviving sub-choices.
SpecializationMatrix reconsidered_answers();

/// Voters who named only a or b all move to c.
TransferMatrix closest_candidate();
/// Voters who named only a or b: 40% to {c}, 60% to {c, d}.
TransferMatrix split_reallocation();
/// {a}: 40% to {c}, 60% to {c, d}; {a, b}: 50% to {c}, 25% each to {c, d} and {c, e}.
TransferMatrix per_answer_reallocation();

/// Valid selectors for demo_tables, in "all" order.
const std::vector<std::string>& table_selectors();

/// Renders the selected scenario tables ("all" for every one). Throws
/// InvalidInput on an unknown selector.
std::vector<RenderedTable> demo_tables(std::string_view selector);

}  // namespace evidence::io::voting
