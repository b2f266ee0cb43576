#include <doctest.h>

#include "support.hpp"
#include "toric/bott.hpp"
#include "toric/error.hpp"
#include "toric/hodge.hpp"
#include "toric/lattice_count.hpp"
#include "toric/shapes.hpp"

using namespace toric;
using namespace toric::testing;

namespace {

Polytope dsimplex(std::size_t n, long d) { return dilate(shapes::simplex(n), d); }

std::vector<long> values(const HodgeVector& h) {
  std::vector<long> out;
  for (const auto& v : h.values) out.push_back(static_cast<long>(v));
  return out;
}

// Interior points of d * (unit triangle) by direct enumeration: x, y > 0, x + y < d.
long interior_triangle_points(long d) {
  long c = 0;
  for (long x = 0; x <= d; ++x) {
    for (long y = 0; y <= d; ++y) c += (x > 0 && y > 0 && x + y < d) ? 1 : 0;
  }
  return c;
}

}  // namespace

TEST_CASE("phi: examples") {
  const Hypersurface h(dsimplex(2, 3));
  const auto full = h.polytope().faces().full_face();
  CHECK(h.phi(full, 1) == 1);
  CHECK(h.phi(full, 2) == 7);
  CHECK(h.phi(full, 0) == 0);
  CHECK(h.phi(full, -2) == 0);
  CHECK(h.interior_of_dilate(full, 2) == 10);
  CHECK_THROWS_AS(h.phi(1000, 1), ToricError);
  CHECK(phi(dsimplex(2, 3), full, 2) == 7);
}

TEST_CASE("euler_ep: examples") {
  CHECK(euler_ep(dsimplex(2, 3), 0) == 0);
  CHECK(euler_ep(dsimplex(2, 3), 1) == 0);
  CHECK(euler_ep(dsimplex(2, 4), 0) == -2);
  CHECK_THROWS_AS(euler_ep(dsimplex(2, 3), 2), ToricError);
}

TEST_CASE("chi_log: examples and the printed lemma") {
  const Hypersurface h(dsimplex(2, 3));
  const auto r = h.chi_log_routes(1);
  CHECK(r.telescoped == -1);
  CHECK(r.by_phi == -1);
  CHECK(h.chi_log(1) == -1);
  CHECK(h.chi_log(2) == 1);
  CHECK(h.chi_log(0) == 1);
  CHECK(h.chi_log_printed(1) == 9);
  CHECK(chi_log(dsimplex(3, 4), 3) == 1);
}

TEST_CASE("primitive Hodge numbers of classical hypersurfaces") {
  CHECK(values(primitive_hodge(dsimplex(2, 3))) == std::vector<long>{1, 1});
  CHECK(values(primitive_hodge(dsimplex(2, 4))) == std::vector<long>{3, 3});
  CHECK(values(primitive_hodge(dsimplex(3, 4))) == std::vector<long>{1, 19, 1});
  CHECK(values(primitive_hodge(dsimplex(3, 3))) == std::vector<long>{0, 6, 0});
  // Quadric surface: h^{1,1} = 2, one class from the ambient space.
  CHECK(values(primitive_hodge(dsimplex(3, 2))) == std::vector<long>{0, 1, 0});
  // Quintic surface: p_g = 4, h^{1,1} = 45.
  CHECK(values(primitive_hodge(dsimplex(3, 5))) == std::vector<long>{4, 44, 4});
  // Cubic threefold: h^{2,1} = 5.
  CHECK(values(primitive_hodge(dsimplex(4, 3))) == std::vector<long>{0, 5, 5, 0});
  // Curves of bidegree (a, b) on P^1 x P^1 have genus (a-1)(b-1).
  for (long a = 1; a <= 4; ++a) {
    for (long b = 1; b <= 4; ++b) {
      const auto box = poly(2, {{0, 0}, {a, 0}, {0, b}, {a, b}});
      const long g = (a - 1) * (b - 1);
      CHECK(values(primitive_hodge(box)) == std::vector<long>{g, g});
    }
  }
}

TEST_CASE("plane curves: genus by brute force") {
  for (long d = 1; d <= 9; ++d) {
    const long g = interior_triangle_points(d);
    CHECK(2 * g == (d - 1) * (d - 2));
    CHECK(values(primitive_hodge(dsimplex(2, d))) == std::vector<long>{g, g});
  }
}

TEST_CASE("printed form breaks symmetry on the plane cubic") {
  const Hypersurface h(dsimplex(2, 3));
  const auto printed = h.primitive_hodge_printed();
  CHECK(printed.values.front() == 13);
  CHECK(printed.values.front() != printed.values.back());
}

TEST_CASE("rejections") {
  try {
    primitive_hodge(shapes::octahedron());
    FAIL("expected NotSimple");
  } catch (const ToricError& e) {
    CHECK(e.kind() == ErrorKind::NotSimple);
  }
  CHECK_THROWS_AS(primitive_hodge(poly(1, {{0}, {3}})), ToricError);
  CHECK_THROWS_AS(chi_log(shapes::cube(2), 3), ToricError);
}

TEST_CASE("property: symmetry, genus law, phi base case and the consistency triangle") {
  std::vector<Polytope> corpus;
  for (long d = 1; d <= 4; ++d) corpus.push_back(dsimplex(2, d));
  for (long d = 1; d <= 3; ++d) corpus.push_back(dilate(shapes::cube(2), d));
  corpus.push_back(dilate(shapes::cube(3), 2));
  corpus.push_back(shapes::product(dsimplex(1, 2), dsimplex(2, 2)));
  corpus.push_back(poly(2, {{0, 0}, {3, 0}, {3, 1}, {1, 3}, {0, 3}}));
  for (long m = 1; m <= 3; ++m) corpus.push_back(shapes::ex5(m));
  for (const auto& p : corpus) {
    const long n = static_cast<long>(p.dim());
    const Hypersurface h(p);
    const auto t = count_table(p);
    for (std::size_t id = 0; id < p.faces().size(); ++id) CHECK(h.phi(id, 1) == t.per_face[id].l_star);
    const auto hv = h.primitive_hodge();
    REQUIRE(hv.values.size() == static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < hv.values.size(); ++i) {
      CHECK(hv.values[i] >= 0);
      CHECK(hv.values[i] == hv.values[hv.values.size() - 1 - i]);
    }
    CHECK(hv.values.back() == t.per_face[p.faces().full_face()].l_star);
    const auto untw = bott1_untwisted(p);
    for (long q = 1; q <= n; ++q) {
      const auto r = h.chi_log_routes(q);
      CHECK(r.telescoped == r.by_phi);
    }
    for (long e = 0; e + 1 <= n; ++e) {
      const BigInt chi_untw = sign_pow(e + 1) * untw.at(static_cast<std::size_t>(e + 1), static_cast<std::size_t>(e + 1));
      CHECK(h.euler_ep(e) == sign_pow(e + 1) * (chi_untw - h.chi_log(e + 1)));
    }
  }
}

TEST_CASE("the face-sign phi sum agrees with the ambient-corrected numbers only on simplices") {
  for (std::size_t n = 2; n <= 3; ++n) {
    for (long d = 1; d <= 4; ++d) {
      const Hypersurface h(dsimplex(n, d));
      CHECK(h.primitive_hodge_phi_sum().values == h.primitive_hodge().values);
    }
  }
  const Hypersurface sq(shapes::cube(2));
  CHECK(values(sq.primitive_hodge()) == std::vector<long>{0, 0});
  CHECK(values(sq.primitive_hodge_phi_sum()) == std::vector<long>{1, 0});
}

TEST_CASE("property: random polygons give genus l*(P) twice; prisms over them stay palindromic") {
  std::mt19937_64 rng(4242);
  int made = 0;
  while (made < 25) {
    std::vector<LatticeVector> pts;
    for (int i = 0; i < 3 + static_cast<int>(rng() % 5); ++i) {
      pts.push_back(lv({static_cast<long>(rng() % 6), static_cast<long>(rng() % 6)}));
    }
    std::optional<Polytope> polygon;
    try {
      polygon = Polytope::from_vertices(2, pts);
    } catch (const ToricError&) {
      continue;
    }
    ++made;
    const auto genus = count_interior(*polygon, polygon->faces().full_face());
    CHECK(primitive_hodge(*polygon).values == std::vector<BigInt>{genus, genus});
    const auto prism = shapes::product(*polygon, poly(1, {{0}, {1 + static_cast<long>(rng() % 2)}}));
    const auto hv = primitive_hodge(prism);
    CHECK(hv.values.front() == hv.values.back());
    CHECK(hv.values.back() == count_interior(prism, prism.faces().full_face()));
  }
}
