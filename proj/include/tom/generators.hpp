#pragma once

#include <vector>

#include "tom/subdivision.hpp"

namespace tom {

// One cell per monotone lattice path from (0,0) to (n-1,d-1); the cell's tree
// has edge (i,j) iff (i,j) lies on the path.
CellCollection staircase(std::size_t n, std::size_t d);

// Triangulation of Delta_{n-1} x Delta_1 indexed by a permutation of
// 0..n-1: cell k has coordinate {1} for perm[0..k), {0,1} at perm[k] and
// {0} for perm(k..n) (0-based elements). Throws NotAPermutation.
CellCollection prism_triangulation(const std::vector<std::size_t>& perm);

// prism_triangulation over all n! permutations, deduplicated. Throws
// TooLarge for n > 6.
std::vector<CellCollection> all_prism_triangulations(std::size_t n);

}  // namespace tom
