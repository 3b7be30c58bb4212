#include "corpus.hpp"
#include "oracles.hpp"
#include "torifold/morse.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace torifold;
using namespace torifold::testing;

namespace {

IntVector iv(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

std::size_t vertex_at(const LabeledPolytope& p, std::initializer_list<long> xs) {
  RatVector point;
  for (long x : xs) point.emplace_back(x);
  const auto v = p.find_vertex(point);
  REQUIRE(v.has_value());
  return *v;
}

}  // namespace

TEST_SUITE("morse") {
  TEST_CASE("genericity examples") {
    const auto t = unit_triangle();
    CHECK(is_generic(t, iv({1, 2})));
    CHECK_FALSE(is_generic(t, iv({1, 1})));
    CHECK(is_generic(interval(1, 1), iv({1})));
    CHECK_THROWS_AS(is_generic(t, iv({0, 0})), std::invalid_argument);
    CHECK_THROWS_AS(is_generic(t, iv({1})), std::invalid_argument);
  }

  TEST_CASE("vertex index examples") {
    const auto t = unit_triangle();
    CHECK(vertex_index(t, vertex_at(t, {0, 0}), iv({1, 2})) == 0);
    CHECK(vertex_index(t, vertex_at(t, {1, 0}), iv({1, 2})) == 2);
    CHECK(vertex_index(t, vertex_at(t, {0, 1}), iv({1, 2})) == 4);
    CHECK_THROWS_AS(vertex_index(t, 0, iv({1, 1})), std::invalid_argument);
  }

  TEST_CASE("Poincare polynomial examples") {
    CHECK(poincare_polynomial(unit_triangle(), iv({1, 2})) == Polynomial{1, 0, 1, 0, 1});
    for (long n = 1; n <= 3; ++n)
      for (long m = 1; m <= 3; ++m) CHECK(poincare_polynomial(interval(n, m), iv({1})) == Polynomial{1, 0, 1});
    CHECK(poincare_polynomial(cube(2), iv({1, 2})) == Polynomial{1, 0, 2, 0, 1});
    CHECK(betti_from_face_numbers(cube(2)) == Polynomial{1, 0, 2, 0, 1});
    CHECK(betti_from_face_numbers(cube(3)) == Polynomial{1, 0, 3, 0, 3, 0, 1});
  }

  TEST_CASE("Morse inequality examples") {
    CHECK(morse_inequality_check({1, 0, 1}, {1, 0, 1}) == Polynomial{});
    CHECK(morse_inequality_check({1, 1, 1}, {1}) == Polynomial{0, 1});
    CHECK_FALSE(morse_inequality_check({1, 2}, {1}).has_value());
    CHECK_FALSE(morse_inequality_check({1}, {1, 1}).has_value());
  }

  TEST_CASE("Betti numbers do not depend on the generic direction") {
    for (const auto& [name, p] : corpus()) {
      CAPTURE(name);
      const Polynomial expected = betti_from_face_numbers(p);
      const auto n = static_cast<int>(p.dim());
      for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const IntVector xi = random_generic_direction(p, seed);
        const MorseReport r = morse_report(p, xi);
        REQUIRE(r.morse_poly == expected);
        CHECK(r.poincare == expected);
        CHECK(std::count(r.indices.begin(), r.indices.end(), 0) == 1);
        CHECK(std::count(r.indices.begin(), r.indices.end(), 2 * n) == 1);
        for (std::size_t v = 0; v < p.vertices().size(); ++v) {
          CHECK(r.indices[v] % 2 == 0);
          CHECK(r.indices[v] == morse_index_from_neighbours(p, v, xi));
        }
        IntVector minus = xi;
        for (auto& x : minus) x = -x;
        const MorseReport back = morse_report(p, minus);
        for (std::size_t v = 0; v < p.vertices().size(); ++v) CHECK(back.indices[v] == 2 * n - r.indices[v]);
      }
      CHECK(std::equal(expected.begin(), expected.end(), expected.rbegin()));
      for (std::size_t k = 1; k < expected.size(); k += 2) CHECK(expected[k] == 0);
      CHECK(std::accumulate(expected.begin(), expected.end(), std::int64_t{0}) ==
            static_cast<std::int64_t>(p.vertices().size()));
      CHECK(expected[0] == 1);
      CHECK(morse_inequality_check(expected, expected) == Polynomial{});
    }
  }

  TEST_CASE("random generic directions are seeded") {
    const auto t = unit_triangle();
    CHECK(random_generic_direction(t, 4) == random_generic_direction(t, 4));
    for (std::uint64_t s = 0; s < 50; ++s) {
      const auto xi = random_generic_direction(t, s, 2);
      CHECK(is_generic(t, xi));
      for (const auto& x : xi) CHECK(abs(x) <= 2);
    }
  }
}
