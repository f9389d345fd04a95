#pragma once

// (n,d)-types: n-tuples of nonempty subsets of [d]. A type doubles as the
// bipartite subgraph of K_{n,d} with an edge (i,j) for each j in A_i, and as
// the face sum_i Delta_{A_i} of a mixed cell.
//
// Everything in the library is 0-based. Conversion to the 1-based notation of
// files and the command line happens in io/cli only.

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tom/error.hpp"

namespace tom {

// Subset of [d] as a bit set; bit j set iff j is an element.
using ElementSet = std::uint64_t;

inline constexpr std::size_t kMaxElements = 64;

inline std::size_t set_size(ElementSet s) { return static_cast<std::size_t>(std::popcount(s)); }
inline bool set_contains(ElementSet s, std::size_t j) { return (s >> j) & 1U; }
inline ElementSet singleton(std::size_t j) { return ElementSet{1} << j; }
inline ElementSet full_set(std::size_t d) {
  return d >= kMaxElements ? ~ElementSet{0} : (ElementSet{1} << d) - 1;
}
std::vector<std::size_t> elements_of(ElementSet s);

class TropicalType {
 public:
  // Throws InvalidType on an empty coordinate, an element >= d, d == 0,
  // d > 64, or an empty tuple.
  TropicalType(std::size_t d, std::vector<ElementSet> coords);

  // Coordinates given as lists of 1-based elements.
  static TropicalType from_lists(std::size_t d,
                                 const std::vector<std::vector<std::size_t>>& one_based);

  std::size_t n() const { return coords_.size(); }
  std::size_t d() const { return d_; }
  ElementSet operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<ElementSet>& coords() const { return coords_; }

  bool has_edge(std::size_t i, std::size_t j) const { return set_contains(coords_[i], j); }
  std::size_t edge_count() const;
  // Union of all coordinates.
  ElementSet support() const;
  bool covers_all_elements() const { return support() == full_set(d_); }
  bool is_tope() const;

  // 1-based lists, the inverse of from_lists.
  std::vector<std::vector<std::size_t>> to_lists() const;
  // Compact notation, e.g. "(12,3)"; elements > 9 are comma separated in braces.
  std::string to_string() const;

  std::size_t hash() const;

  // Orders by d, then coordinate bit masks lexicographically.
  friend auto operator<=>(const TropicalType&, const TropicalType&) = default;
  friend bool operator==(const TropicalType&, const TropicalType&) = default;

 private:
  std::size_t d_;
  std::vector<ElementSet> coords_;
};

struct TropicalTypeHash {
  std::size_t operator()(const TropicalType& t) const { return t.hash(); }
};

void require_same_shape(const TropicalType& a, const TropicalType& b);

// True iff the type, viewed as a subgraph of K_{n,d}, has no cycle.
bool is_forest(const TropicalType& t);

enum class Side { left, right };

struct DegreeVector {
  std::vector<int> entries;
  Side side;
  friend bool operator==(const DegreeVector&, const DegreeVector&) = default;
};

DegreeVector left_degree_vector(const TropicalType& t);
// Entry j is (number of i with j in A_i) - 1, so -1 marks an uncovered element.
DegreeVector right_degree_vector(const TropicalType& t);

// The (d,n)-type with i in dual_j iff j in A_i. Throws MissingElement.
TropicalType dual(const TropicalType& t);

struct ComparabilityGraph {
  std::size_t vertex_count = 0;
  // Unordered pairs stored with first < second; self-loops never recorded.
  std::set<std::pair<std::size_t, std::size_t>> undirected;
  std::set<std::pair<std::size_t, std::size_t>> directed;
};

ComparabilityGraph comparability_graph(const TropicalType& a, const TropicalType& b);

bool is_acyclic(const ComparabilityGraph& g);

// A closed walk v_0, v_1, ..., v_k = v_0 using at least one directed edge,
// or nullopt when the graph is acyclic. The first step is along a directed edge.
std::optional<std::vector<std::size_t>> find_directed_cycle(const ComparabilityGraph& g);

class OrderedPartition {
 public:
  // Throws InvalidType unless the blocks are nonempty, disjoint and cover [d].
  OrderedPartition(std::size_t d, std::vector<ElementSet> blocks);

  std::size_t d() const { return d_; }
  const std::vector<ElementSet>& blocks() const { return blocks_; }
  std::string to_string() const;

  friend bool operator==(const OrderedPartition&, const OrderedPartition&) = default;

 private:
  std::size_t d_;
  std::vector<ElementSet> blocks_;
};

// All ordered set partitions of [d] (Fubini number many).
std::vector<OrderedPartition> all_ordered_partitions(std::size_t d);

TropicalType refine(const TropicalType& a, const OrderedPartition& p);

// Types obtained by removing one element from one coordinate of size >= 2,
// sorted and deduplicated. Throws CyclicType unless a is a forest.
std::vector<TropicalType> single_deletion_refinements(const TropicalType& a);

// Two-block partition whose refinement of the forest a deletes element k
// from coordinate i: the second block is the set of right vertices in the
// component of left vertex i once edge (i,k) is removed.
OrderedPartition deletion_partition(const TropicalType& a, std::size_t i, std::size_t k);

using RankVector = std::vector<int>;

// r_i = min(|A_i|, |B_i|) - 1.
RankVector rank(const TropicalType& a, const TropicalType& b);

// Componentwise alpha >= beta.
bool rank_geq(const RankVector& alpha, const RankVector& beta);

// Sum over coordinates of the symmetric difference sizes.
std::size_t delta(const TropicalType& a, const TropicalType& b);

// All (a_1..a_parts) of nonnegative integers summing to total, in
// lexicographically decreasing order.
std::vector<std::vector<int>> weak_compositions(int total, std::size_t parts);

}  // namespace tom
