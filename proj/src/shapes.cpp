#include "toric/shapes.hpp"

#include "toric/error.hpp"

namespace toric::shapes {

Polytope simplex(std::size_t n) {
  std::vector<LatticeVector> pts;
  pts.emplace_back(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    LatticeVector e(n, 0);
    e[i] = 1;
    pts.push_back(std::move(e));
  }
  return Polytope::from_vertices(n, pts);
}

Polytope cube(std::size_t n) {
  std::vector<LatticeVector> pts;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    LatticeVector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = (mask >> i) & 1U;
    pts.push_back(std::move(v));
  }
  return Polytope::from_vertices(n, pts);
}

Polytope ex5(long m) {
  if (m < 1) throw ToricError(ErrorKind::OutOfRange, "ex5 needs m >= 1");
  std::vector<LatticeVector> pts = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {1, 1, m}};
  return Polytope::from_vertices(3, pts);
}

Polytope octahedron() {
  std::vector<LatticeVector> pts = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0},
                                    {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
  return Polytope::from_vertices(3, pts);
}

Polytope product(const Polytope& p, const Polytope& q) {
  std::vector<LatticeVector> pts;
  for (const auto& a : p.vertices()) {
    for (const auto& b : q.vertices()) {
      LatticeVector v(a);
      v.insert(v.end(), b.begin(), b.end());
      pts.push_back(std::move(v));
    }
  }
  return Polytope::from_vertices(p.dim() + q.dim(), pts);
}

Polytope point() {
  std::vector<LatticeVector> pts = {LatticeVector{}};
  return Polytope::from_vertices(0, pts);
}

Polytope by_name(const std::string& name, long arg) {
  if (name == "simplex") {
    if (arg < 0) throw ToricError(ErrorKind::InputFormat, "simplex dimension must be >= 0");
    return simplex(static_cast<std::size_t>(arg));
  }
  if (name == "cube") {
    if (arg < 0) throw ToricError(ErrorKind::InputFormat, "cube dimension must be >= 0");
    return cube(static_cast<std::size_t>(arg));
  }
  if (name == "ex5") return ex5(arg);
  if (name == "octahedron") return octahedron();
  throw ToricError(ErrorKind::InputFormat, "unknown built-in polytope '" + name + "'");
}

}  // namespace toric::shapes
