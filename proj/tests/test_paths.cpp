#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "tom/axioms.hpp"
#include "tom/generators.hpp"
#include "tom/paths.hpp"

using namespace tom;
using oracle::T;

namespace {

TypeSystem square_faces() {
  return face_types(CellCollection(2, 2, {T(2, {{1, 2}, {2}}), T(2, {{1}, {1, 2}})}));
}

// The per-coordinate conditions read directly: every member stays between
// A_i n B_i and A_i u B_i and contains A_i or B_i; the path has length delta.
void check_strong_path_shape(const TypePath& path, const TropicalType& a, const TropicalType& b) {
  REQUIRE(!path.empty());
  CHECK(path.front() == a);
  CHECK(path.back() == b);
  CHECK(path.size() - 1 == delta(a, b));
  const auto r = rank(a, b);
  for (const auto& c : path) {
    for (std::size_t i = 0; i < a.n(); ++i) {
      CHECK((c[i] & (a[i] & b[i])) == (a[i] & b[i]));
      CHECK((c[i] & ~(a[i] | b[i])) == 0);
      CHECK((((c[i] & a[i]) == a[i]) || ((c[i] & b[i]) == b[i])));
      CHECK(static_cast<int>(set_size(c[i])) > r[i]);
    }
  }
}

}  // namespace

TEST_CASE("adjacency") {
  CHECK(adjacent(T(2, {{1, 2}, {2}}), T(2, {{1}, {2}})));
  CHECK(!adjacent(T(2, {{1, 2}, {2}}), T(2, {{1}, {1, 2}})));
  CHECK(!adjacent(T(2, {{1, 2}, {2}}), T(2, {{1, 2}, {2}})));
  CHECK(!adjacent(T(3, {{1, 2}}), T(3, {{3}})));
  CHECK_THROWS_AS((void)adjacent(T(2, {{1}}), T(2, {{1}, {1}})), ShapeMismatch);
}

TEST_CASE("q_alpha") {
  const auto faces = face_types(staircase(3, 3));
  CHECK(q_alpha(faces, {0, 0, 0}).types() == faces.types());
  const auto q = q_alpha(faces, {1, 0, 0});
  CHECK(q.size() > 0);
  for (const auto& t : faces) CHECK(q.contains(t) == (set_size(t[0]) >= 2));
  for (const auto& a : faces) {
    for (const auto& b : faces) {
      const auto sub = q_alpha(faces, rank(a, b));
      CHECK(sub.contains(a));
      CHECK(sub.contains(b));
    }
  }
}

TEST_CASE("q_alpha connectivity") {
  const auto faces = face_types(staircase(3, 3));
  CHECK(q_alpha_connected(faces, {0, 0, 0}).connected());
  const auto empty = q_alpha_connected(faces, {2, 2, 2});
  CHECK(empty.type_count == 0);
  CHECK(empty.connected());
  for (const auto& alpha : {RankVector{2, 0, 0}, RankVector{1, 1, 0}, RankVector{0, 0, 2}}) {
    const auto report = q_alpha_connected(faces, alpha);
    CHECK(report.type_count > 0);
    CHECK(report.connected());
  }
  const TypeSystem split(2, 2, {T(2, {{1}, {1}}), T(2, {{2}, {2}})});
  const auto report = connectivity(split);
  CHECK(report.components.size() == 2);
  CHECK(!report.connected());
}

TEST_CASE("strong path examples") {
  const auto faces = square_faces();
  const auto a = T(2, {{1, 2}, {2}});
  const auto b = T(2, {{1}, {1, 2}});
  CHECK(strong_path(faces, a, a) == TypePath{a});
  const auto path = strong_path(faces, a, b);
  CHECK(path.size() == 3);
  CHECK(is_strong_path(faces, path));
  check_strong_path_shape(path, a, b);
  CHECK_THROWS_AS((void)strong_path(faces, a, T(2, {{2}, {1}})), NotInSystem);
}

TEST_CASE("the worked per-coordinate edit pattern is a strong path") {
  // 123 -> 1234 -> 12345 -> 1245 -> 145, as a one-coordinate system.
  const TypePath path{T(5, {{1, 2, 3}}), T(5, {{1, 2, 3, 4}}), T(5, {{1, 2, 3, 4, 5}}),
                      T(5, {{1, 2, 4, 5}}), T(5, {{1, 4, 5}})};
  const TypeSystem system(1, 5, path);
  CHECK(is_strong_path(system, path));
  check_strong_path_shape(path, path.front(), path.back());
  const auto found = strong_path(system, path.front(), path.back());
  CHECK(found.size() == 5);
  // Deleting before adding is not strong.
  const TypePath late_add{T(5, {{1, 2, 3}}), T(5, {{1, 2}}), T(5, {{1, 2, 4}})};
  CHECK(!is_strong_path(TypeSystem(1, 5, late_add), late_add));
}

TEST_CASE("no strong path in a system lacking intermediate types") {
  const TypeSystem system(1, 2, {T(2, {{1}}), T(2, {{2}})});
  CHECK_THROWS_AS((void)strong_path(system, T(2, {{1}}), T(2, {{2}})), NoStrongPath);
  CHECK_THROWS_AS((void)eliminate_via_path(system, T(2, {{1}}), T(2, {{2}}), 0), NoStrongPath);
}

TEST_CASE("eliminate via path examples") {
  const auto faces = square_faces();
  const auto a = T(2, {{1, 2}, {2}});
  const auto b = T(2, {{1}, {1, 2}});
  CHECK(eliminate_via_path(faces, a, a, 0) == a);
  const auto c = eliminate_via_path(faces, a, b, 1);
  CHECK(c[1] == 0b11);
  CHECK(c == T(2, {{1}, {1, 2}}));
  CHECK(is_elimination_witness(a, b, 1, c));
}

TEST_CASE("strong paths exist between every pair of a staircase face system") {
  const auto faces = face_types(staircase(3, 3));
  for (const auto& a : faces) {
    for (const auto& b : faces) {
      const auto path = strong_path(faces, a, b);
      CHECK(is_strong_path(faces, path));
      check_strong_path_shape(path, a, b);
    }
  }
}

TEST_CASE("eliminate via path agrees with brute force on random draws") {
  const auto faces = face_types(staircase(3, 3));
  std::mt19937_64 rng(20261018);
  std::uniform_int_distribution<std::size_t> pick(0, faces.size() - 1);
  std::uniform_int_distribution<std::size_t> coord(0, 2);
  for (int draw = 0; draw < 100; ++draw) {
    const auto& a = faces[pick(rng)];
    const auto& b = faces[pick(rng)];
    const auto j = coord(rng);
    const auto c = eliminate_via_path(faces, a, b, j);
    CHECK(faces.contains(c));
    CHECK(is_elimination_witness(a, b, j, c));
    CHECK(oracle::elimination_witness_scan(faces.types(), a, b, j));
  }
}
