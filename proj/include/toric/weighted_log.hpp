#pragma once

#include <cstddef>

#include "toric/lattice_count.hpp"
#include "toric/numeric.hpp"
#include "toric/polytope.hpp"

namespace toric {

/// h^0 of W_k Omega^p(log(-K)) (x) L for the ample L with support polytope P.
///
/// Sums, over faces G of codimension s <= min(k, p), the twisted Bott value of (p-s)-forms on G
/// computed from the closed faces of G. k > p is clamped to p. Requires a simple polytope.
BigInt h0_weighted(const Polytope& poly, long p, long k);
BigInt h0_weighted(const Polytope& poly, const FaceCountTable& table, long p, long k);

/// The k-th graded piece: sum over faces G of codimension k of the (p-k)-form value on G.
BigInt weighted_increment(const Polytope& poly, const FaceCountTable& table, long p, long k);

}  // namespace toric
