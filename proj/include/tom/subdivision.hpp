#pragma once

// Cell collections claimed to encode fine mixed subdivisions of n*Delta_{d-1}
// (equivalently triangulations of Delta_{n-1} x Delta_{d-1}), their
// validation, and the type system of all their faces.

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "tom/core.hpp"

namespace tom {

class CellCollection {
 public:
  // Throws InvalidType on a cell of the wrong shape or a duplicate cell.
  // Whether the cells are spanning trees is left to validate_subdivision.
  CellCollection(std::size_t n, std::size_t d, std::vector<TropicalType> cells);

  std::size_t n() const { return n_; }
  std::size_t d() const { return d_; }
  std::size_t size() const { return cells_.size(); }
  const TropicalType& operator[](std::size_t c) const { return cells_[c]; }
  const std::vector<TropicalType>& cells() const { return cells_; }

  // Dual of every cell, with (n,d) swapped. Throws MissingElement.
  CellCollection transposed() const;

  // Equality as sets of cells.
  bool same_cells(const CellCollection& other) const;

  friend bool operator==(const CellCollection&, const CellCollection&) = default;

 private:
  std::size_t n_;
  std::size_t d_;
  std::vector<TropicalType> cells_;
};

// Candidate tropical oriented matroid: a deduplicated, sorted set of types.
class TypeSystem {
 public:
  static constexpr std::size_t kNoCell = static_cast<std::size_t>(-1);

  // provenance[t] is the index of a cell containing types[t] as a face, or
  // kNoCell; empty means no provenance at all. Duplicates are merged.
  TypeSystem(std::size_t n, std::size_t d, std::vector<TropicalType> types,
             std::vector<std::size_t> provenance = {});

  std::size_t n() const { return n_; }
  std::size_t d() const { return d_; }
  std::size_t size() const { return types_.size(); }
  bool empty() const { return types_.empty(); }
  const TropicalType& operator[](std::size_t t) const { return types_[t]; }
  const std::vector<TropicalType>& types() const { return types_; }
  auto begin() const { return types_.begin(); }
  auto end() const { return types_.end(); }

  bool contains(const TropicalType& t) const { return index_.count(t) != 0; }
  std::optional<std::size_t> index_of(const TropicalType& t) const;
  std::size_t provenance(std::size_t t) const { return provenance_[t]; }

  TypeSystem without(const TropicalType& t) const;

 private:
  std::size_t n_;
  std::size_t d_;
  std::vector<TropicalType> types_;
  std::vector<std::size_t> provenance_;
  std::unordered_map<TropicalType, std::size_t, TropicalTypeHash> index_;
};

struct GraphVertex {
  Side side;
  std::size_t index;
  friend bool operator==(const GraphVertex&, const GraphVertex&) = default;
};

// Condition 1 failure.
struct NonTreeCell {
  std::size_t cell;
  std::size_t edge_count;
  bool connected;
};

// Condition 2 failure: T minus edge (left, right) has no isolated vertex but
// is contained in no other cell.
struct DanglingFacet {
  std::size_t cell;
  std::size_t left;
  std::size_t right;
  TropicalType facet;
};

// Condition 3 failure: a simple directed cycle of length >= 4 in U(T_first,
// T_second), T_first edges oriented left to right, T_second right to left.
struct OverlapCycle {
  std::size_t first;
  std::size_t second;
  std::vector<GraphVertex> cycle;
};

struct ValidationReport {
  std::vector<NonTreeCell> non_trees;
  std::vector<DanglingFacet> dangling_facets;
  std::vector<OverlapCycle> overlap_cycles;

  bool spanning_trees_ok() const { return non_trees.empty(); }
  bool facets_ok() const { return dangling_facets.empty(); }
  bool overlaps_ok() const { return overlap_cycles.empty(); }
  bool valid() const { return spanning_trees_ok() && facets_ok() && overlaps_ok(); }
  std::string summary() const;
};

bool is_spanning_tree(const TropicalType& t);

// Simple directed cycle of length >= 4 in U(first, second), if any.
std::optional<std::vector<GraphVertex>> overlap_cycle(const TropicalType& first,
                                                      const TropicalType& second);

ValidationReport validate_subdivision(const CellCollection& cells);

// All types (J_1..J_n) with nonempty J_i inside the coordinates of some cell.
// Throws InvalidSubdivision unless validate_subdivision passes.
TypeSystem face_types(const CellCollection& cells);

// Same, skipping validation.
TypeSystem face_types_unchecked(const CellCollection& cells);

std::vector<TropicalType> topes(const TypeSystem& system);

struct BijectionReport {
  std::size_t cell_count = 0;
  std::size_t expected_count = 0;
  // Compositions hit by more than one cell, and compositions hit by none.
  std::vector<std::vector<int>> ldv_collisions;
  std::vector<std::vector<int>> ldv_missing;
  std::vector<std::vector<int>> rdv_collisions;
  std::vector<std::vector<int>> rdv_missing;
  // Cells whose degree vector is not a composition at all (negative entry
  // or wrong sum).
  std::vector<std::size_t> malformed_cells;

  bool ldv_bijective() const {
    return ldv_collisions.empty() && ldv_missing.empty() && malformed_cells.empty();
  }
  bool rdv_bijective() const {
    return rdv_collisions.empty() && rdv_missing.empty() && malformed_cells.empty();
  }
  bool ok() const {
    return cell_count == expected_count && ldv_bijective() && rdv_bijective();
  }
};

std::size_t binomial(std::size_t n, std::size_t k);

// Throws InvalidSubdivision unless validate_subdivision passes.
BijectionReport ldv_bijection_check(const CellCollection& cells);

struct CellUnitSimplex {
  std::size_t cell;
  std::vector<int> rdv;
  // Every location a (sum a_j = n - 1) whose unit simplex conv{a + e_j} lies
  // in the cell.
  std::vector<std::vector<int>> locations;
  bool ok() const { return locations.size() == 1 && locations.front() == rdv; }
};

struct UnitSimplexReport {
  std::vector<CellUnitSimplex> cells;
  bool ok() const;
};

// Unit simplices contained in one cell, by exact transportation feasibility.
std::vector<std::vector<int>> unit_simplex_locations(const TropicalType& cell);

// Throws InvalidSubdivision unless validate_subdivision passes.
UnitSimplexReport unit_simplex_check(const CellCollection& cells);

}  // namespace tom
