#include <doctest.h>

#include "support.hpp"
#include "toric/bott.hpp"
#include "toric/error.hpp"
#include "toric/lattice_count.hpp"
#include "toric/shapes.hpp"
#include "toric/weighted_log.hpp"

using namespace toric;
using namespace toric::testing;

TEST_CASE("weighted filtration on the doubled triangle") {
  const auto p = dilate(shapes::simplex(2), 2);
  CHECK(h0_weighted(p, 1, 0) == 3);
  CHECK(h0_weighted(p, 1, 1) == 12);
  CHECK(h0_weighted(p, 1, 5) == 12);
}

TEST_CASE("log one-forms on P^2 twisted by O(d)") {
  // W_1 Omega^1(log) on P^2 with three boundary lines: (d+1)(d+2) sections for d >= 1.
  for (long d = 1; d <= 5; ++d) {
    CHECK(h0_weighted(dilate(shapes::simplex(2), d), 1, 1) == (d + 1) * (d + 2));
  }
}

TEST_CASE("p = 0 gives the lattice point count") {
  for (long k = 0; k <= 3; ++k) {
    CHECK(h0_weighted(dilate(shapes::cube(2), 2), 0, k) == 9);
    CHECK(h0_weighted(shapes::ex5(3), 0, k) == 4);
  }
}

TEST_CASE("rejections") {
  CHECK_THROWS_AS(h0_weighted(shapes::octahedron(), 1, 1), ToricError);
  CHECK_THROWS_AS(h0_weighted(shapes::cube(2), 3, 0), ToricError);
  CHECK_THROWS_AS(h0_weighted(shapes::cube(2), 1, -1), ToricError);
}

TEST_CASE("property: monotone, stable, base case and increments") {
  std::vector<Polytope> corpus;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (long k = 1; k <= 3; ++k) {
      corpus.push_back(dilate(shapes::simplex(n), k));
      corpus.push_back(dilate(shapes::cube(n), k));
    }
  }
  corpus.push_back(shapes::product(shapes::simplex(1), dilate(shapes::simplex(2), 2)));
  for (long m = 1; m <= 3; ++m) corpus.push_back(shapes::ex5(m));
  for (const auto& p : corpus) {
    const long n = static_cast<long>(p.dim());
    const auto table = count_table(p);
    for (long q = 0; q <= n; ++q) {
      CHECK(h0_weighted(p, table, q, 0) == bott1_twisted(p, q));
      for (long k = 1; k <= n + 1; ++k) {
        const auto prev = h0_weighted(p, table, q, k - 1);
        const auto cur = h0_weighted(p, table, q, k);
        CHECK(prev <= cur);
        if (k > q) CHECK(prev == cur);
        if (k <= q) {
          const auto inc = weighted_increment(p, table, q, k);
          CHECK(inc >= 0);
          CHECK(cur - prev == inc);
        }
      }
    }
  }
}
