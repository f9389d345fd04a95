#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tom/core.hpp"
#include "tom/generators.hpp"

using namespace tom;
using oracle::T;

namespace {

// Every (n,d)-type for small n, d.
std::vector<TropicalType> all_types(std::size_t n, std::size_t d) {
  std::vector<TropicalType> out;
  std::vector<ElementSet> coords(n, 1);
  const ElementSet last = full_set(d);
  while (true) {
    out.emplace_back(d, coords);
    std::size_t i = 0;
    while (i < n && coords[i] == last) coords[i++] = 1;
    if (i == n) break;
    ++coords[i];
  }
  return out;
}

}  // namespace

TEST_CASE("type construction rejects invalid coordinates") {
  CHECK_THROWS_AS(TropicalType(2, {0b01, 0}), InvalidType);
  CHECK_THROWS_AS(TropicalType(2, {0b100}), InvalidType);
  CHECK_THROWS_AS(TropicalType(0, {1}), InvalidType);
  CHECK_THROWS_AS(TropicalType(65, {1}), InvalidType);
  CHECK_THROWS_AS(TropicalType(2, {}), InvalidType);
  CHECK_NOTHROW(TropicalType(64, {~ElementSet{0}}));
  const auto t = T(3, {{1, 2}, {3}});
  CHECK(t.to_lists() == std::vector<std::vector<std::size_t>>{{1, 2}, {3}});
  CHECK(t.to_string() == "(12,3)");
  CHECK(t.edge_count() == 3);
  CHECK(!t.is_tope());
  CHECK(T(2, {{1}, {2}}).is_tope());
}

TEST_CASE("degree vectors") {
  CHECK(left_degree_vector(T(2, {{1, 2}, {2}})).entries == std::vector<int>{1, 0});
  CHECK(left_degree_vector(T(2, {{1}, {1}, {1}})).entries == std::vector<int>{0, 0, 0});
  CHECK(left_degree_vector(T(3, {{1, 2, 3}, {3}, {3}})).entries == std::vector<int>{2, 0, 0});
  CHECK(right_degree_vector(T(2, {{1, 2}, {2}})).entries == std::vector<int>{0, 1});
  CHECK(right_degree_vector(T(2, {{1}, {2}})).entries == std::vector<int>{0, 0});
  CHECK(right_degree_vector(T(3, {{1, 2, 3}, {3}, {3}})).entries == std::vector<int>{0, 0, 2});
  CHECK(right_degree_vector(T(2, {{1}, {1}})).entries == std::vector<int>{1, -1});
  CHECK(right_degree_vector(T(2, {{1}})).side == Side::right);
}

TEST_CASE("staircase n=d=3 contains the cell used by the degree examples") {
  const auto cells = staircase(3, 3).cells();
  CHECK(std::find(cells.begin(), cells.end(), T(3, {{1, 2, 3}, {3}, {3}})) != cells.end());
}

TEST_CASE("dual") {
  CHECK(dual(T(2, {{1, 2}, {2}})) == T(2, {{1}, {1, 2}}));
  CHECK(dual(T(3, {{1, 2, 3}, {3}, {3}})) == T(3, {{1}, {1}, {1, 2, 3}}));
  try {
    (void)dual(T(2, {{1}, {1}}));
    FAIL("expected MissingElement");
  } catch (const MissingElement& e) {
    CHECK(e.element() == 1);
  }
}

TEST_CASE("dual properties on every small type") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t d = 1; d <= 3; ++d) {
      for (const auto& t : all_types(n, d)) {
        if (!t.covers_all_elements()) {
          CHECK_THROWS_AS((void)dual(t), MissingElement);
          continue;
        }
        const auto u = dual(t);
        CHECK(u.n() == d);
        CHECK(u.d() == n);
        CHECK(dual(u) == t);
        CHECK(left_degree_vector(u).entries == right_degree_vector(t).entries);
        CHECK(right_degree_vector(u).entries == left_degree_vector(t).entries);
      }
    }
  }
}

TEST_CASE("degree sums of spanning trees") {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t d = 1; d <= 4; ++d) {
      const auto stair = staircase(n, d);
      for (const auto& cell : stair.cells()) {
        const auto l = left_degree_vector(cell).entries;
        const auto r = right_degree_vector(cell).entries;
        CHECK(std::accumulate(l.begin(), l.end(), 0) == static_cast<int>(d) - 1);
        CHECK(std::accumulate(r.begin(), r.end(), 0) == static_cast<int>(n) - 1);
        CHECK(cell.edge_count() == n + d - 1);
      }
    }
  }
}

TEST_CASE("comparability graph examples") {
  const auto a = T(2, {{1, 2}, {2}});
  const auto g = comparability_graph(a, a);
  CHECK(g.directed.empty());
  CHECK(g.undirected.size() == 1);

  const auto g2 = comparability_graph(T(2, {{1, 2}, {1}}), T(2, {{2}, {1, 2}}));
  CHECK(g2.directed == std::set<std::pair<std::size_t, std::size_t>>{{0, 1}});
  CHECK(g2.undirected.empty());
  CHECK(is_acyclic(g2));

  const auto g3 = comparability_graph(T(2, {{1}, {2}}), T(2, {{2}, {1}}));
  CHECK(g3.directed == std::set<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 0}});
  CHECK(!is_acyclic(g3));
  CHECK_THROWS_AS((void)comparability_graph(T(2, {{1}}), T(3, {{1}})), ShapeMismatch);
}

TEST_CASE("acyclicity examples") {
  ComparabilityGraph g{3, {{0, 1}, {1, 2}}, {}};
  CHECK(is_acyclic(g));
  CHECK(!find_directed_cycle(g));
  ComparabilityGraph two{2, {}, {{0, 1}, {1, 0}}};
  CHECK(!is_acyclic(two));
  ComparabilityGraph mixed{3, {{1, 2}}, {{0, 1}, {2, 0}}};
  CHECK(!is_acyclic(mixed));
  CHECK(oracle::semidigraph_has_cycle(3, mixed.undirected, mixed.directed));
  const auto cycle = find_directed_cycle(mixed);
  REQUIRE(cycle);
  CHECK(cycle->front() == cycle->back());
}

TEST_CASE("comparability graph and acyclicity agree with the oracles on all small pairs") {
  for (std::size_t n = 1; n <= 2; ++n) {
    for (std::size_t d = 1; d <= 3; ++d) {
      const auto types = all_types(n, d);
      for (const auto& a : types) {
        for (const auto& b : types) {
          const auto g = comparability_graph(a, b);
          const auto [und, dir] = oracle::comparability_edges(a, b);
          CHECK(g.undirected == und);
          CHECK(g.directed == dir);
          const bool cyclic = oracle::semidigraph_has_cycle(d, und, dir);
          CHECK(is_acyclic(g) == !cyclic);
          const auto walk = find_directed_cycle(g);
          CHECK(walk.has_value() == cyclic);
          if (walk) {
            bool used_directed = false;
            for (std::size_t t = 0; t + 1 < walk->size(); ++t) {
              const auto u = (*walk)[t], v = (*walk)[t + 1];
              const bool arc = g.directed.count({u, v}) != 0;
              const bool edge = g.undirected.count({std::min(u, v), std::max(u, v)}) != 0;
              CHECK((arc || edge));
              used_directed = used_directed || arc;
            }
            CHECK(used_directed);
          }
        }
      }
    }
  }
}

TEST_CASE("comparability of a type with itself is acyclic") {
  for (const auto& a : all_types(3, 3)) CHECK(is_acyclic(comparability_graph(a, a)));
}

TEST_CASE("ordered partitions and refinement") {
  CHECK_THROWS_AS(OrderedPartition(3, {0b011, 0b010, 0b100}), InvalidType);
  CHECK_THROWS_AS(OrderedPartition(3, {0b011}), InvalidType);
  CHECK_THROWS_AS(OrderedPartition(3, {0b011, 0, 0b100}), InvalidType);
  CHECK(all_ordered_partitions(1).size() == 1);
  CHECK(all_ordered_partitions(3).size() == 13);
  CHECK(all_ordered_partitions(4).size() == 75);
  CHECK(all_ordered_partitions(5).size() == 541);
  CHECK(OrderedPartition(3, {0b001, 0b110}).to_string() == "(1|23)");

  CHECK(refine(T(3, {{1, 2, 3}, {3}}), OrderedPartition(3, {0b011, 0b100})) == T(3, {{3}, {3}}));
  CHECK(refine(T(2, {{1, 2}, {1}}), OrderedPartition(2, {0b01, 0b10})) == T(2, {{2}, {1}}));
  for (std::size_t d = 1; d <= 3; ++d) {
    const OrderedPartition whole(d, {full_set(d)});
    for (const auto& a : all_types(2, d)) CHECK(refine(a, whole) == a);
  }
}

TEST_CASE("single deletion refinements") {
  CHECK(single_deletion_refinements(T(2, {{1}, {2}})).empty());
  CHECK(single_deletion_refinements(T(2, {{1, 2}, {2}})) ==
        std::vector<TropicalType>{T(2, {{1}, {2}}), T(2, {{2}, {2}})});
  CHECK(single_deletion_refinements(T(3, {{1, 2}, {2, 3}})).size() == 4);
  CHECK_THROWS_AS((void)single_deletion_refinements(T(2, {{1, 2}, {1, 2}})), CyclicType);
}

TEST_CASE("every single deletion of a forest is a two-block refinement") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t d = 1; d <= 4; ++d) {
      if (n * d > 9) continue;
      for (const auto& a : all_types(n, d)) {
        if (!is_forest(a)) continue;
        for (std::size_t i = 0; i < n; ++i) {
          if (set_size(a[i]) < 2) continue;
          for (std::size_t k : elements_of(a[i])) {
            auto coords = a.coords();
            coords[i] &= ~singleton(k);
            const TropicalType expected(d, coords);
            const auto p = deletion_partition(a, i, k);
            CHECK(p.blocks().size() == 2);
            CHECK(refine(a, p) == expected);
          }
        }
      }
    }
  }
}

TEST_CASE("the union-based two-block construction fails on a path") {
  // A = (12,23,34) is a path, so a forest; deleting 2 from A_1. The second
  // block would be W \ {2} = {3,4}, so A_1 meets only the first block and
  // is left untouched.
  const auto a = T(4, {{1, 2}, {2, 3}, {3, 4}});
  REQUIRE(is_forest(a));
  const auto blocks = oracle::literal_deletion_blocks(a, 0, 1);
  const OrderedPartition literal(4, blocks);
  const auto expected = T(4, {{1}, {2, 3}, {3, 4}});
  CHECK(refine(a, literal) != expected);
  CHECK(refine(a, deletion_partition(a, 0, 1)) == expected);
}

TEST_CASE("rank and delta") {
  CHECK(rank(T(3, {{1, 2, 3}, {2}}), T(3, {{3}, {1, 2, 3}})) == RankVector{0, 0});
  CHECK(rank(T(5, {{1, 2, 3}, {4, 5}}), T(5, {{3}, {1, 2, 5}})) == RankVector{0, 1});
  const auto a = T(4, {{1, 2, 3}, {4}, {2, 4}});
  CHECK(rank(a, a) == RankVector{2, 0, 1});
  CHECK(delta(a, a) == 0);
  CHECK(delta(T(3, {{1, 2, 3}, {2}}), T(3, {{3}, {1, 2, 3}})) == 4);
  CHECK(delta(T(2, {{1}, {1}}), T(2, {{2}, {2}})) == 4);
  CHECK_THROWS_AS((void)rank(T(2, {{1}}), T(2, {{1}, {2}})), ShapeMismatch);
  CHECK_THROWS_AS((void)delta(T(2, {{1}}), T(3, {{1}})), ShapeMismatch);
  CHECK(rank_geq({1, 0}, {0, 0}));
  CHECK(!rank_geq({1, 0}, {0, 1}));
}

TEST_CASE("rank and delta are symmetric") {
  const auto types = all_types(2, 3);
  for (const auto& a : types) {
    for (const auto& b : types) {
      CHECK(rank(a, b) == rank(b, a));
      CHECK(delta(a, b) == delta(b, a));
      CHECK((delta(a, b) == 0) == (a == b));
    }
  }
}

TEST_CASE("weak compositions") {
  CHECK(weak_compositions(2, 2) == std::vector<std::vector<int>>{{2, 0}, {1, 1}, {0, 2}});
  CHECK(weak_compositions(0, 3) == std::vector<std::vector<int>>{{0, 0, 0}});
  CHECK(weak_compositions(3, 4).size() == 20);
}

TEST_CASE("forests") {
  CHECK(is_forest(T(3, {{1, 2}, {2, 3}})));
  CHECK(!is_forest(T(2, {{1, 2}, {1, 2}})));
  CHECK(is_forest(T(2, {{1}, {1}})));
}
