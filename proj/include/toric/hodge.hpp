#pragma once

#include <cstddef>
#include <vector>

#include "toric/lattice_count.hpp"
#include "toric/numeric.hpp"
#include "toric/polytope.hpp"

namespace toric {

/// h_0^{p, n-1-p} of the primitive middle cohomology, p = 0..n-1.
struct HodgeVector {
  std::size_t n = 0;
  std::vector<BigInt> values;
};

struct ChiLog {
  BigInt telescoped;  // from the long exact sequence, sections on dilates
  BigInt by_phi;      // closed form in the phi_i
};

/// Combinatorial invariants of an ample nondegenerate hypersurface D whose support polytope is P.
///
/// Count tables of the dilates 1..n are built once in the constructor; afterwards every method
/// is const and safe to call concurrently.
class Hypersurface {
 public:
  explicit Hypersurface(Polytope poly);

  const Polytope& polytope() const { return poly_; }

  /// l*(k * face).
  BigInt interior_of_dilate(std::size_t face_id, long k) const;

  /// phi_i(face) = sum_{k=1}^i (-1)^(i-k) C(dim+1, i-k) l*(k * face); zero for i <= 0.
  BigInt phi(std::size_t face_id, long i) const;

  /// e^p(D) for 0 <= p <= n-1.
  BigInt euler_ep(long p) const;

  /// chi(Omega^q(log D)) for 0 <= q <= n by both routes; RouteMismatch if they differ.
  BigInt chi_log(long q) const;
  ChiLog chi_log_routes(long q) const;
  /// The sum of C(dim+1, q+k) l*(k * face) as printed in the source; disagrees with chi_log.
  BigInt chi_log_printed(long q) const;

  /// Primitive Hodge numbers from e^p minus the classes restricted from the ambient variety.
  /// Throws NegativeEntry or HodgeAsymmetric.
  HodgeVector primitive_hodge() const;
  /// (-1)^n sum_G (-1)^dim(G) phi_{dim(G)-p}(G). Equals primitive_hodge when P is a simplex;
  /// can differ otherwise (the unit square gives (1, 0)). No checks.
  HodgeVector primitive_hodge_phi_sum() const;
  /// The same sum without the (-1)^dim factor; no checks.
  HodgeVector primitive_hodge_printed() const;

 private:
  void require_simple_polytope() const;
  const FaceCountTable& table(long k) const { return tables_.at(static_cast<std::size_t>(k - 1)); }

  Polytope poly_;
  bool simple_ = false;
  std::vector<FaceCountTable> tables_;  // dilates 1..n
};

BigInt phi(const Polytope& poly, std::size_t face_id, long i);
BigInt euler_ep(const Polytope& poly, long p);
BigInt chi_log(const Polytope& poly, long q);
HodgeVector primitive_hodge(const Polytope& poly);

}  // namespace toric
