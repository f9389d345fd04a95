#pragma once

// Paths between types: adjacency, the cardinality-bounded subsystems Q_alpha,
// strong paths, and elimination witnesses read off a strong path.

#include <vector>

#include "tom/core.hpp"
#include "tom/subdivision.hpp"

namespace tom {

using TypePath = std::vector<TropicalType>;

// Exactly one coordinate differs, and by exactly one element.
bool adjacent(const TropicalType& a, const TropicalType& b);

// Types with |A_i| > alpha_i for every i.
TypeSystem q_alpha(const TypeSystem& system, const RankVector& alpha);

struct ConnectivityReport {
  std::size_t type_count = 0;
  // Members of each component as indices into the filtered system, sorted
  // by their smallest member.
  std::vector<std::vector<std::size_t>> components;
  bool connected() const { return components.size() <= 1; }
};

ConnectivityReport connectivity(const TypeSystem& system);
ConnectivityReport q_alpha_connected(const TypeSystem& system, const RankVector& alpha);

// True iff consecutive members are adjacent, every member is in the system,
// and each coordinate only adds elements of B_i \ A_i, only deletes elements
// of A_i \ B_i, and never adds after a deletion.
bool is_strong_path(const TypeSystem& system, const TypePath& path);

// A strong path from a to b inside the system, of length exactly delta(a, b).
// Ties are broken towards the smallest successor type, so the result is the
// lexicographically smallest strong path. Throws NotInSystem if a or b is
// missing and NoStrongPath if none exists.
TypePath strong_path(const TypeSystem& system, const TropicalType& a, const TropicalType& b);

// Elimination witness for (a, b, position) built from a strong path: the
// first member whose coordinate `position` is A_j u B_j, with each other
// coordinate trimmed to A_k, B_k or A_k u B_k. Throws NoStrongPath, or
// NotInSystem if the trimmed type is missing (system not closed under faces).
TropicalType eliminate_via_path(const TypeSystem& system, const TropicalType& a,
                                const TropicalType& b, std::size_t position);

}  // namespace tom
