#include "tom/generators.hpp"

#include <algorithm>
#include <numeric>

namespace tom {

namespace {

void extend_paths(std::size_t n, std::size_t d, std::size_t i, std::size_t j,
                  std::vector<ElementSet>& coords, std::vector<TropicalType>& out) {
  coords[i] |= singleton(j);
  if (i + 1 == n && j + 1 == d) {
    out.emplace_back(d, coords);
  } else {
    if (j + 1 < d) extend_paths(n, d, i, j + 1, coords, out);
    if (i + 1 < n) extend_paths(n, d, i + 1, j, coords, out);
  }
  coords[i] &= ~singleton(j);
}

}  // namespace

CellCollection staircase(std::size_t n, std::size_t d) {
  if (n == 0 || d == 0 || d > kMaxElements) throw InvalidType("staircase needs 1 <= n, 1 <= d <= 64");
  std::vector<ElementSet> coords(n, 0);
  std::vector<TropicalType> cells;
  extend_paths(n, d, 0, 0, coords, cells);
  return CellCollection(n, d, std::move(cells));
}

CellCollection prism_triangulation(const std::vector<std::size_t>& perm) {
  const std::size_t n = perm.size();
  if (n == 0) throw NotAPermutation("empty permutation");
  std::vector<bool> seen(n, false);
  for (std::size_t p : perm) {
    if (p >= n || seen[p]) throw NotAPermutation("not a permutation of 0.." + std::to_string(n - 1));
    seen[p] = true;
  }
  std::vector<TropicalType> cells;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<ElementSet> coords(n);
    for (std::size_t t = 0; t < n; ++t) {
      coords[perm[t]] = t < k ? singleton(1) : t == k ? full_set(2) : singleton(0);
    }
    cells.emplace_back(2, std::move(coords));
  }
  return CellCollection(n, 2, std::move(cells));
}

std::vector<CellCollection> all_prism_triangulations(std::size_t n) {
  if (n == 0) throw NotAPermutation("n must be positive");
  if (n > 6) throw TooLarge("prism triangulations enumerated for n <= 6 only");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<CellCollection> out;
  do {
    auto candidate = prism_triangulation(perm);
    const bool duplicate = std::any_of(out.begin(), out.end(), [&](const CellCollection& c) {
      return c.same_cells(candidate);
    });
    if (!duplicate) out.push_back(std::move(candidate));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace tom
