#pragma once

// Exact feasibility of the transportation problem with unit supplies:
//   z_{i,k} >= 0,  sum_{k in S_i} z_{i,k} = 1 for every source i,
//   sum_i z_{i,k} = demand_k for every sink k.
// Equivalently, whether the point `demand` lies in the Minkowski sum of the
// simplices Delta_{S_i}.

#include <span>
#include <vector>

#include "tom/core.hpp"
#include "tom/rational.hpp"

namespace tom {

// Decided by an augmenting-path max flow over exact rationals.
bool transportation_feasible(std::span<const ElementSet> supports,
                             std::span<const Rational> demand);

// point is a vector of d coordinates.
bool minkowski_contains(const TropicalType& cell, std::span<const Rational> point);

}  // namespace tom
