#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "toric/numeric.hpp"
#include "toric/polytope.hpp"

namespace toric {

/// Support polytopes Delta_0..Delta_s of the ample summands L_0..L_s of E on an n-dimensional base.
struct BundleData {
  std::size_t base_dim = 0;
  std::vector<Polytope> summands;

  /// Validates s >= 1, common ambient dimension and simplicity.
  static BundleData make(std::vector<Polytope> summands);

  std::size_t rank() const { return summands.size(); }  // s + 1
};

/// l(Delta_J(k)): sum over lambda in Z^{s+1}, lambda_j >= 1 on J, >= 0 elsewhere, sum = k, of
/// l(lambda_0 Delta_0 + ... + lambda_s Delta_s). Zero when |J| > k.
BigInt cayley_count(const BundleData& bundle, std::span<const std::size_t> subset, long k);

/// The polytope nabla in R^{s+n} with coordinates (lambda_1..lambda_s, x).
///
/// Inequalities need not have primitive normals. The vertex set may be lower-dimensional
/// (e.g. k = 0), in which case polytope() throws LowDimensional.
struct Nabla {
  std::size_t dim = 0;
  std::vector<Halfspace> inequalities;
  std::vector<LatticeVector> vertices;

  BigInt lattice_points() const;
  Polytope polytope() const;
};

/// Throws EmptyPolytope if k + sum(lower_bounds) < 0, NonLatticeVertex if a vertex is fractional.
Nabla nabla(const BundleData& bundle, long k, std::span<const long> lower_bounds);

/// h^0(Y, Omega^p_{Y/P}(k)) for Y = P(L_0 + ... + L_s): the alternating sum over t <= p of
/// cayley_count over t-subsets. Throws OutOfRange unless 0 <= p <= s and k >= 0.
BigInt h0_relative(const BundleData& bundle, long p, long k);

}  // namespace toric
