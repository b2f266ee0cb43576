#pragma once

#include <cstddef>
#include <string>

#include "toric/polytope.hpp"

namespace toric::shapes {

/// conv{0, e_1, ..., e_n}
Polytope simplex(std::size_t n);
/// [0,1]^n
Polytope cube(std::size_t n);
/// conv{(0,0,0), (1,0,0), (0,1,0), (1,1,m)}
Polytope ex5(long m);
/// conv{+-e_i} in R^3; not simple.
Polytope octahedron();
/// Cartesian product P x Q.
Polytope product(const Polytope& p, const Polytope& q);
/// The single point of R^0.
Polytope point();

/// "simplex N", "cube N", "ex5 M", "octahedron".
Polytope by_name(const std::string& name, long arg);

}  // namespace toric::shapes
