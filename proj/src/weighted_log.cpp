#include "toric/weighted_log.hpp"

#include <algorithm>

#include "toric/error.hpp"

namespace toric {

BigInt weighted_increment(const Polytope& poly, const FaceCountTable& table, long p, long s) {
  const long n = static_cast<long>(poly.dim());
  if (s < 0 || s > std::min(p, n)) return 0;
  const auto& lattice = poly.faces();
  BigInt total = 0;
  for (std::size_t g : lattice.faces_of_dim(static_cast<std::size_t>(n - s))) {
    // Bott I on the (n-s)-dimensional face G for (p-s)-forms.
    for (long j = 0; j <= p - s; ++j) {
      const auto target_dim = static_cast<std::size_t>(n - s - j);
      BigInt closed = 0;
      for (std::size_t f : lattice.subfaces(g)) {
        if (lattice.face(f).dim == target_dim) closed += table.per_face[f].l;
      }
      total += sign_pow(j) * binomial(n - s - j, p - s - j) * closed;
    }
  }
  return total;
}

BigInt h0_weighted(const Polytope& poly, const FaceCountTable& table, long p, long k) {
  require_simple(poly);
  const long n = static_cast<long>(poly.dim());
  if (p < 0 || p > n) throw ToricError(ErrorKind::OutOfRange, "weighted forms need 0 <= p <= n");
  if (k < 0) throw ToricError(ErrorKind::OutOfRange, "weight index k must be >= 0");
  const long top = std::min(k, p);
  BigInt total = 0;
  for (long s = 0; s <= top; ++s) total += weighted_increment(poly, table, p, s);
  return total;
}

BigInt h0_weighted(const Polytope& poly, long p, long k) {
  require_simple(poly);
  return h0_weighted(poly, count_table(poly), p, k);
}

}  // namespace toric
