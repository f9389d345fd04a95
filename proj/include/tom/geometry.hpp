#pragma once

// Exact geometry around fine mixed cells and tropical hyperplane arrangements
// (max-plus convention: a (+) b = max(a, b), a (.) b = a + b).

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tom/core.hpp"
#include "tom/rational.hpp"
#include "tom/subdivision.hpp"

namespace tom {

class WeightMatrix {
 public:
  // rows.size() == n, each row of length d.
  explicit WeightMatrix(std::vector<std::vector<Rational>> rows);

  std::size_t n() const { return rows_.size(); }
  std::size_t d() const { return rows_.front().size(); }
  const Rational& operator()(std::size_t i, std::size_t j) const { return rows_[i][j]; }
  const std::vector<std::vector<Rational>>& rows() const { return rows_; }

  friend bool operator==(const WeightMatrix&, const WeightMatrix&) = default;

 private:
  std::vector<std::vector<Rational>> rows_;
};

using BinaryMatrix = std::vector<std::vector<int>>;

// Facet description of a fine cell projected to x_d = 0: for each edge (i, j)
// whose left end has degree >= 2, the facet sum_{k in I_e} x_k (<= or >=) c_e.
struct FacetMatrix {
  std::size_t d = 0;
  // Edges (left, right), 0-based, in row order.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  // One row per facet over columns 0..d-2.
  BinaryMatrix rows;
  std::vector<Rational> rhs;
  // true: row . x <= rhs holds on the cell; false: row . x >= rhs.
  std::vector<bool> upper;
};

// Throws NotSpanningTree.
FacetMatrix facet_matrix(const TropicalType& cell);

// Brute force over every square submatrix with exact integer determinants.
// Throws TooLarge beyond 12 rows or 12 columns.
bool is_totally_unimodular(const BinaryMatrix& m);

// Exact determinant of a square integer matrix (fraction-free elimination).
long long determinant(BinaryMatrix m);

// True iff the row supports are pairwise nested or disjoint.
bool has_laminar_rows(const BinaryMatrix& m);

// A column order making every row's ones consecutive, or nullopt. Laminar
// supports are ordered directly; otherwise column permutations are searched,
// which throws TooLarge beyond 10 columns.
std::optional<std::vector<std::size_t>> interval_column_order(const BinaryMatrix& m);

bool is_interval_matrix_reorderable(const BinaryMatrix& m);

// A_i = argmax_j (w_ij + x_j).
TropicalType point_type(const WeightMatrix& w, std::span<const Rational> x);

class NonGenericWeights : public Error {
 public:
  NonGenericWeights(TropicalType tree, std::size_t left, std::size_t right);
  const TropicalType& tree() const { return tree_; }
  std::size_t left() const { return left_; }
  std::size_t right() const { return right_; }

 private:
  TropicalType tree_;
  std::size_t left_;
  std::size_t right_;
};

// Tree potentials: y_i + z_j = w_ij on tree edges, z_{d-1} = 0.
struct TreePotential {
  std::vector<Rational> left;
  std::vector<Rational> right;
};

TreePotential tree_potential(const WeightMatrix& w, const TropicalType& tree);

// Every spanning tree of K_{n,d}, in increasing type order.
std::vector<TropicalType> all_spanning_trees(std::size_t n, std::size_t d);

// Cells of the regular fine mixed subdivision induced by w: the spanning trees
// whose potential satisfies y_i + z_j > w_ij off the tree. Throws
// NonGenericWeights when some otherwise accepted tree has an equality.
CellCollection regular_subdivision(const WeightMatrix& w);

}  // namespace tom
