// Test helpers and independent oracles. Nothing here calls the counting or formula code under
// test; oracles work from vertex coordinates alone.
#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

#include "toric/numeric.hpp"
#include "toric/polytope.hpp"

namespace toric::testing {

inline LatticeVector lv(std::initializer_list<long> xs) {
  LatticeVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline Polytope poly(std::size_t dim, std::initializer_list<std::initializer_list<long>> pts) {
  std::vector<LatticeVector> v;
  for (auto p : pts) v.push_back(lv(p));
  return Polytope::from_vertices(dim, v);
}

/// Id of the face whose vertex set is exactly the given coordinates.
inline std::size_t face_with(const Polytope& p, std::initializer_list<std::initializer_list<long>> pts) {
  std::vector<std::size_t> ids;
  for (auto c : pts) {
    const auto target = lv(c);
    auto it = std::find(p.vertices().begin(), p.vertices().end(), target);
    if (it == p.vertices().end()) throw std::runtime_error("not a vertex");
    ids.push_back(static_cast<std::size_t>(it - p.vertices().begin()));
  }
  std::sort(ids.begin(), ids.end());
  auto id = p.faces().find_by_vertices(ids);
  if (!id) throw std::runtime_error("not a face");
  return *id;
}

/// Barycentric coordinates of x in the simplex with vertices v_0..v_n (exact rationals).
inline std::vector<Rational> barycentric(const std::vector<LatticeVector>& v, const LatticeVector& x) {
  const std::size_t n = x.size();
  // Solve sum_{i>=1} t_i (v_i - v_0) = x - v_0.
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) a[r][c] = Rational(v[c + 1][r] - v[0][r]);
    a[r][n] = Rational(x[r] - v[0][r]);
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (a[piv][c] == 0) ++piv;
    std::swap(a[c], a[piv]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const Rational f = a[r][c] / a[c][c];
      for (std::size_t j = c; j <= n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  std::vector<Rational> t(n + 1);
  Rational rest = 1;
  for (std::size_t i = 0; i < n; ++i) {
    t[i + 1] = a[i][n] / a[i][i];
    rest -= t[i + 1];
  }
  t[0] = rest;
  return t;
}

/// Brute-force lattice points of the face of a simplex spanned by `face` (indices into v).
/// interior = true counts the relative interior only.
inline BigInt simplex_face_points(const std::vector<LatticeVector>& v,
                                  const std::vector<std::size_t>& face, bool interior) {
  const std::size_t n = v.front().size();
  LatticeVector lo = v.front();
  LatticeVector hi = v.front();
  for (const auto& p : v) {
    for (std::size_t i = 0; i < n; ++i) {
      lo[i] = std::min(lo[i], p[i]);
      hi[i] = std::max(hi[i], p[i]);
    }
  }
  BigInt total = 0;
  LatticeVector x = lo;
  while (true) {
    const auto t = barycentric(v, x);
    bool ok = true;
    for (std::size_t i = 0; i < t.size() && ok; ++i) {
      const bool on_face = std::find(face.begin(), face.end(), i) != face.end();
      if (!on_face) ok = t[i] == 0;
      else ok = interior ? t[i] > 0 : t[i] >= 0;
    }
    if (ok) ++total;
    std::size_t d = 0;
    while (d < n && x[d] == hi[d]) {
      x[d] = lo[d];
      ++d;
    }
    if (d == n) break;
    ++x[d];
  }
  return total;
}

inline BigInt factorial(long n) {
  BigInt f = 1;
  for (long i = 2; i <= n; ++i) f *= i;
  return f;
}

inline BigInt choose(long a, long b) {
  if (b < 0 || a < b || a < 0) return 0;
  return factorial(a) / (factorial(b) * factorial(a - b));
}

}  // namespace toric::testing
