#include <doctest.h>

#include "oracles.hpp"
#include "tom/generators.hpp"
#include "tom/geometry.hpp"
#include "tom/subdivision.hpp"
#include "tom/transport.hpp"

using namespace tom;
using oracle::T;

namespace {

CellCollection square() { return CellCollection(2, 2, {T(2, {{1, 2}, {2}}), T(2, {{1}, {1, 2}})}); }

std::size_t count_triangulations(std::size_t n, std::size_t d) {
  const auto trees = all_spanning_trees(n, d);
  const std::size_t cells = binomial(n + d - 2, d - 1);
  std::size_t valid = 0;
  for (const auto& pick : oracle::combinations(trees.size(), cells)) {
    std::vector<TropicalType> chosen;
    for (auto t : pick) chosen.push_back(trees[t]);
    if (validate_subdivision(CellCollection(n, d, chosen)).valid()) ++valid;
  }
  return valid;
}

}  // namespace

TEST_CASE("cell collection invariants") {
  CHECK_THROWS_AS(CellCollection(2, 2, {T(2, {{1}})}), InvalidType);
  CHECK_THROWS_AS(CellCollection(2, 2, {T(3, {{1}, {1}})}), InvalidType);
  CHECK_THROWS_AS(CellCollection(2, 2, {T(2, {{1, 2}, {2}}), T(2, {{1, 2}, {2}})}), InvalidType);
  CHECK(square().transposed().transposed() == square());
  CHECK(square().same_cells(CellCollection(2, 2, {T(2, {{1}, {1, 2}}), T(2, {{1, 2}, {2}})})));
}

TEST_CASE("validate the square") {
  CHECK(validate_subdivision(square()).valid());
  const CellCollection bad(2, 2, {T(2, {{1, 2}, {2}}), T(2, {{2}, {1, 2}})});
  const auto report = validate_subdivision(bad);
  CHECK(!report.valid());
  CHECK(report.spanning_trees_ok());
  CHECK(!report.facets_ok());
  bool saw_12 = false;
  for (const auto& f : report.dangling_facets) saw_12 = saw_12 || f.facet == T(2, {{1}, {2}});
  CHECK(saw_12);
  CHECK(!report.overlaps_ok());
}

TEST_CASE("validate reports non-trees") {
  const CellCollection c(2, 2, {T(2, {{1, 2}, {1, 2}})});
  const auto report = validate_subdivision(c);
  REQUIRE(report.non_trees.size() == 1);
  CHECK(report.non_trees[0].edge_count == 4);
  CHECK(report.non_trees[0].connected);
  const CellCollection disc(2, 2, {T(2, {{1}, {2}})});
  REQUIRE(validate_subdivision(disc).non_trees.size() == 1);
  CHECK(!validate_subdivision(disc).non_trees[0].connected);
  CHECK_THROWS_AS((void)face_types(c), InvalidSubdivision);
}

TEST_CASE("single cell for n = 1") {
  for (std::size_t d = 1; d <= 5; ++d) {
    const CellCollection c(1, d, {TropicalType(d, {full_set(d)})});
    CHECK(validate_subdivision(c).valid());
    CHECK(ldv_bijection_check(c).ok());
    CHECK(unit_simplex_check(c).ok());
    CHECK(unit_simplex_locations(c[0]) == std::vector<std::vector<int>>{std::vector<int>(d, 0)});
    CHECK(topes(face_types(c)).size() == d);
  }
}

TEST_CASE("condition 3 ignores shared edges but finds genuine overlaps") {
  const auto a = T(2, {{1, 2}, {2}});
  CHECK(!overlap_cycle(a, a));
  const auto b = T(2, {{2}, {1, 2}});
  const auto cycle = overlap_cycle(a, b);
  REQUIRE(cycle);
  CHECK(cycle->size() >= 4);
  CHECK(!overlap_cycle(a, T(2, {{1}, {1, 2}})));
}

TEST_CASE("validation counts the classical triangulations of Delta_1 x Delta_k") {
  // Delta_1 x Delta_k has (k+1)! triangulations, all of them staircase-like.
  CHECK(count_triangulations(2, 2) == 2);
  CHECK(count_triangulations(2, 3) == 6);
  CHECK(count_triangulations(3, 2) == 6);
  CHECK(count_triangulations(2, 4) == 24);
}

TEST_CASE("face types") {
  const CellCollection one(1, 2, {T(2, {{1, 2}})});
  CHECK(face_types(one).types() ==
        std::vector<TropicalType>{T(2, {{1}}), T(2, {{2}}), T(2, {{1, 2}})});
  const auto faces = face_types(square());
  CHECK(faces.size() == 5);
  for (const auto& t : {T(2, {{1}, {1}}), T(2, {{1}, {2}}), T(2, {{2}, {2}}),
                        T(2, {{1, 2}, {2}}), T(2, {{1}, {1, 2}})}) {
    CHECK(faces.contains(t));
  }
  CHECK(topes(faces) == std::vector<TropicalType>{T(2, {{1}, {1}}), T(2, {{1}, {2}}),
                                                   T(2, {{2}, {2}})});
  REQUIRE(faces.index_of(T(2, {{1, 2}, {2}})));
  const auto cell_index = faces.provenance(*faces.index_of(T(2, {{1, 2}, {2}})));
  CHECK(square()[cell_index] == T(2, {{1, 2}, {2}}));
}

TEST_CASE("face systems contain cells and boundary types, independent of cell order") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t d = 1; d <= 4; ++d) {
      const auto cells = staircase(n, d);
      const auto faces = face_types(cells);
      for (const auto& c : cells.cells()) CHECK(faces.contains(c));
      for (std::size_t j = 0; j < d; ++j) {
        CHECK(faces.contains(TropicalType(d, std::vector<ElementSet>(n, singleton(j)))));
      }
      auto reversed = cells.cells();
      std::reverse(reversed.begin(), reversed.end());
      CHECK(face_types(CellCollection(n, d, reversed)).types() == faces.types());
    }
  }
}

TEST_CASE("bijection check") {
  const auto report = ldv_bijection_check(square());
  CHECK(report.ok());
  CHECK(report.cell_count == 2);
  CHECK(report.expected_count == 2);
  CHECK(ldv_bijection_check(staircase(3, 3)).cell_count == 6);
  CHECK(ldv_bijection_check(staircase(3, 3)).ok());
  CHECK(ldv_bijection_check(staircase(3, 4)).cell_count == 10);
  CHECK(binomial(4, 2) == 6);
  CHECK(binomial(5, 3) == 10);
  CHECK(binomial(2, 5) == 0);
}

TEST_CASE("transportation feasibility") {
  const auto cell = T(2, {{1, 2}, {2}});
  using V = std::vector<Rational>;
  CHECK(minkowski_contains(cell, V{1, 1}));
  CHECK(minkowski_contains(cell, V{0, 2}));
  CHECK(!minkowski_contains(cell, V{2, 0}));
  CHECK(minkowski_contains(cell, V{Rational(1, 2), Rational(3, 2)}));
  CHECK(!minkowski_contains(cell, V{Rational(-1, 2), Rational(5, 2)}));
  CHECK(!minkowski_contains(cell, V{1, 0}));
}

TEST_CASE("transportation feasibility agrees with the Hall oracle") {
  std::vector<TropicalType> cells;
  for (const auto& stair : {staircase(3, 3), staircase(2, 4)}) {
    for (const auto& c : stair.cells()) cells.push_back(c);
  }
  cells.push_back(T(3, {{1, 2}, {1, 2}, {3}}));
  std::size_t inside = 0, total = 0;
  for (const auto& cell : cells) {
    const std::size_t d = cell.d();
    // Points with coordinates in {0, 1/2, ..., n} summing to n or nearby.
    std::vector<int> halves(d, 0);
    const int top = 2 * static_cast<int>(cell.n());
    while (true) {
      std::vector<Rational> p;
      for (int h : halves) p.emplace_back(h, 2);
      const bool fast = minkowski_contains(cell, p);
      CHECK(fast == oracle::hall_contains(cell, p));
      inside += fast;
      ++total;
      std::size_t j = 0;
      while (j < d && halves[j] == top) halves[j++] = 0;
      if (j == d) break;
      ++halves[j];
    }
  }
  CHECK(inside > 0);
  CHECK(inside < total);
}

TEST_CASE("unit simplex examples") {
  const auto cell = T(2, {{1, 2}, {2}});
  CHECK(unit_simplex_locations(cell) == std::vector<std::vector<int>>{{0, 1}});
  const auto report = unit_simplex_check(square());
  CHECK(report.ok());
}

TEST_CASE("every staircase cell has one unit simplex at its right degree vector") {
  for (std::size_t n = 1; n <= 5; ++n) {
    for (std::size_t d = 1; d <= 5; ++d) {
      if (n + d > 9) continue;
      const auto cells = staircase(n, d);
      CHECK(validate_subdivision(cells).valid());
      CHECK(ldv_bijection_check(cells).ok());
      CHECK(unit_simplex_check(cells).ok());
    }
  }
}

TEST_CASE("transposed valid collections stay valid") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t d = 1; d <= 4; ++d) {
      const auto t = staircase(n, d).transposed();
      CHECK(t.n() == d);
      CHECK(t.d() == n);
      CHECK(validate_subdivision(t).valid());
    }
  }
}

TEST_CASE("a missing cell shows up as dangling facets and a short count") {
  auto cells = staircase(3, 3).cells();
  cells.erase(cells.begin() + 2);
  const CellCollection partial(3, 3, cells);
  const auto report = validate_subdivision(partial);
  CHECK(report.spanning_trees_ok());
  CHECK(!report.facets_ok());
  CHECK(report.overlaps_ok());
}
