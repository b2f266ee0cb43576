#include <doctest.h>

#include "support.hpp"
#include "toric/bott.hpp"
#include "toric/error.hpp"
#include "toric/lattice_count.hpp"
#include "toric/shapes.hpp"

using namespace toric;
using namespace toric::testing;

namespace {

std::vector<Polytope> small_corpus() {
  std::vector<Polytope> out;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (long k = 1; k <= 3; ++k) out.push_back(dilate(shapes::simplex(n), k));
  }
  for (std::size_t n = 1; n <= 3; ++n) {
    for (long k = 1; k <= 2; ++k) out.push_back(dilate(shapes::cube(n), k));
  }
  out.push_back(shapes::product(shapes::simplex(1), dilate(shapes::simplex(2), 2)));
  out.push_back(shapes::product(shapes::simplex(2), shapes::simplex(2)));
  for (long m = 1; m <= 3; ++m) out.push_back(shapes::ex5(m));
  // Prism over a triangle and a lattice pentagon.
  out.push_back(poly(3, {{0, 0, 0}, {2, 0, 0}, {0, 2, 0}, {0, 0, 3}, {2, 0, 3}, {0, 2, 3}}));
  out.push_back(poly(2, {{0, 0}, {2, 0}, {2, 1}, {1, 2}, {0, 2}}));
  return out;
}

}  // namespace

TEST_CASE("untwisted formulas: examples") {
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto t1 = bott1_untwisted(shapes::simplex(n));
    const auto t2 = bott2_untwisted(shapes::simplex(n));
    for (std::size_t p = 0; p <= n; ++p) {
      CHECK(t1.at(p, p) == 1);
      CHECK(t2.at(p, p) == 1);
      for (std::size_t q = 0; q <= n; ++q) {
        if (p != q) CHECK(t1.at(p, q) == 0);
      }
    }
  }
  CHECK(bott1_untwisted(shapes::cube(2)).at(1, 1) == 2);
  CHECK(bott2_untwisted(shapes::cube(2)).at(1, 1) == 2);
  CHECK(bott1_untwisted(shapes::cube(3)).at(1, 1) == 3);
  CHECK(bott2_untwisted(shapes::cube(3)).at(0, 0) == 1);
  CHECK_FALSE(bott1_untwisted(shapes::cube(2)).twisted);
}

TEST_CASE("twisted formulas: examples") {
  const auto t2 = dilate(shapes::simplex(2), 2);
  const auto t3 = dilate(shapes::simplex(2), 3);
  const auto q2 = dilate(shapes::cube(2), 2);
  CHECK(bott1_twisted(t2, 1) == 3);
  CHECK(bott1_twisted(t3, 2) == 1);
  CHECK(bott1_twisted(q2, 1) == 6);
  CHECK(bott2_twisted(t2, 1) == 3);
  CHECK(bott2_twisted(q2, 1) == 6);
  CHECK(bott2_twisted(t3, 0) == 10);
  CHECK_THROWS_AS(bott1_twisted(t2, 3), ToricError);
  CHECK_THROWS_AS(bott2_twisted(t2, -1), ToricError);
}

TEST_CASE("formulas reject non-simple polytopes") {
  const auto oct = shapes::octahedron();
  for (auto fn : {+[](const Polytope& p) { (void)bott1_untwisted(p); },
                  +[](const Polytope& p) { (void)bott2_untwisted(p); },
                  +[](const Polytope& p) { (void)bott1_twisted(p, 1); },
                  +[](const Polytope& p) { (void)bott2_twisted(p, 1); }}) {
    try {
      fn(oct);
      FAIL("expected NotSimple");
    } catch (const ToricError& e) {
      CHECK(e.kind() == ErrorKind::NotSimple);
    }
  }
}

TEST_CASE("generating polynomials") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto g = generating_polys(shapes::simplex(n));
    CHECK(g.untwisted == UniPoly(std::vector<Rational>(n + 1, Rational(1))));
  }
  const auto g2 = generating_polys(dilate(shapes::simplex(2), 2));
  CHECK(g2.twisted == UniPoly(std::vector<Rational>{6, 3}));
  CHECK(generating_polys(shapes::cube(2)).untwisted == UniPoly(std::vector<Rational>{1, 2, 1}));
}

TEST_CASE("pn_oracle: examples and Serre duality") {
  CHECK(pn_oracle(2, 1, 0, 2) == 3);
  CHECK(pn_oracle(2, 1, 1, 0) == 1);
  CHECK(pn_oracle(2, 1, 2, -4) == 15);
  CHECK(pn_oracle(2, 1, 0, 0) == 0);
  CHECK(pn_oracle(3, 0, 0, 0) == 1);
  // Serre duality on P^n: h^q(Omega^p(k)) = h^{n-q}(Omega^{n-p}(-k)).
  for (long n = 1; n <= 5; ++n) {
    for (long p = 0; p <= n; ++p) {
      for (long k = -7; k <= 7; ++k) {
        for (long q = 0; q <= n; ++q) CHECK(pn_oracle(n, p, q, k) == pn_oracle(n, n - p, n - q, -k));
      }
    }
  }
  // Euler sequence check: h^0(Omega^1(k)) on P^n equals (n+1) C(n+k-1, n) - C(n+k, n) for k >= 1.
  for (long n = 1; n <= 5; ++n) {
    for (long k = 1; k <= 6; ++k) {
      CHECK(pn_oracle(n, 1, 0, k) == (n + 1) * choose(n + k - 1, n) - choose(n + k, n));
    }
  }
}

TEST_CASE("dilated simplices match the projective-space oracle") {
  for (long n = 1; n <= 3; ++n) {
    for (long k = 1; k <= 4; ++k) {
      const auto p = dilate(shapes::simplex(static_cast<std::size_t>(n)), k);
      for (long q = 0; q <= n; ++q) {
        CHECK(bott1_twisted(p, q) == pn_oracle(n, q, 0, k));
        CHECK(bott2_twisted(p, q) == pn_oracle(n, q, 0, k));
      }
    }
  }
}

TEST_CASE("property: formula equivalence, Serre symmetry and reductions") {
  for (const auto& p : small_corpus()) {
    const long n = static_cast<long>(p.dim());
    const auto u1 = bott1_untwisted(p);
    const auto u2 = bott2_untwisted(p);
    CHECK(u1.entries == u2.entries);
    const auto tw1 = twisted_table(p, BottFormula::FaceSums);
    const auto tw2 = twisted_table(p, BottFormula::InteriorSums);
    CHECK(tw1.entries == tw2.entries);
    CHECK(tw1.twisted);
    const auto table = count_table(p);
    const auto full = p.faces().full_face();
    for (long q = 0; q <= n; ++q) {
      CHECK(u1.at(q, q) == u1.at(n - q, n - q));
      CHECK(bott1_twisted(p, q) == bott2_twisted(p, q));
      CHECK(bott1_twisted(p, q) >= 0);
      for (long r = 1; r <= n; ++r) CHECK(tw1.at(q, r) == 0);
    }
    CHECK(bott1_twisted(p, 0) == table.per_face[full].l);
    CHECK(bott2_twisted(p, n) == table.per_face[full].l_star);
    const auto g = generating_polys(p);
    for (long q = 0; q <= n; ++q) {
      CHECK(g.untwisted.coefficient(q) == Rational(u1.at(q, q)));
      CHECK(g.twisted.coefficient(q) == Rational(tw1.at(q, 0)));
    }
  }
}

TEST_CASE("property: the face-sum and interior-sum formulas agree on closed-form simplex tables") {
  // Direct formula-level check on the closed forms for dilated simplices.
  for (long n = 0; n <= 6; ++n) {
    for (long k = 1; k <= 6; ++k) {
      FaceCountTable t;
      for (long j = 0; j <= n; ++j) {
        t.closed_by_codim.push_back(choose(n + k - j, k) * choose(n + 1, j));
        t.interior_by_dim.push_back(choose(k - 1, j) * choose(n + 1, n - j));
      }
      for (long p = 0; p <= n; ++p) {
        CHECK(twisted_by_faces(t, p) == pn_oracle(n, p, 0, k));
        CHECK(twisted_by_interiors(t, p) == pn_oracle(n, p, 0, k));
      }
    }
  }
}
