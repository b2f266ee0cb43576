#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "toric/lattice_count.hpp"
#include "toric/numeric.hpp"
#include "toric/polytope.hpp"
#include "toric/unipoly.hpp"

namespace toric {

/// h^q(P, Omega^p) or h^q(P, Omega^p(D)), indexed entries[p][q].
struct CohomologyTable {
  std::size_t n = 0;
  bool twisted = false;
  std::vector<std::vector<BigInt>> entries;

  const BigInt& at(std::size_t p, std::size_t q) const { return entries.at(p).at(q); }
};

// Formulas on precomputed combinatorial data. No simplicity check; p outside 0..n throws
// OutOfRange.

/// sum_{j=0}^p (-1)^(p-j) C(n-j, p-j) f_{n-j}
BigInt untwisted_by_faces(std::span<const BigInt> f_vector, long p);
/// sum_{s=p}^n (-1)^(s+p) C(s, p) f_s
BigInt untwisted_by_interiors(std::span<const BigInt> f_vector, long p);
/// sum_{j=0}^p (-1)^j C(n-j, p-j) sum_{F in F_{n-j}} l(F)
BigInt twisted_by_faces(const FaceCountTable& table, long p);
/// sum_{s=p}^n C(s, p) sum_{G in F_s} l*(G)
BigInt twisted_by_interiors(const FaceCountTable& table, long p);

// Polytope entry points. All require a simple polytope (NotSimple otherwise).

CohomologyTable bott1_untwisted(const Polytope& p);
CohomologyTable bott2_untwisted(const Polytope& p);
BigInt bott1_twisted(const Polytope& poly, long p);
BigInt bott2_twisted(const Polytope& poly, long p);

enum class BottFormula { FaceSums = 1, InteriorSums = 2 };

/// All h^q(Omega^p(D)); only the q = 0 column can be nonzero.
CohomologyTable twisted_table(const Polytope& poly, BottFormula formula);

struct GeneratingPolys {
  UniPoly untwisted;  // sum_p h^p(Omega^p) y^p = sum_j f_j (y-1)^j
  UniPoly twisted;    // sum_p h^0(Omega^p(D)) y^p = sum_s Delta_(s) (y+1)^s
};

/// Both generating polynomials, checked coefficient-wise against the tables (RouteMismatch).
GeneratingPolys generating_polys(const Polytope& poly);

/// Closed-form h^q(P^n, Omega^p(k)); k may be negative.
BigInt pn_oracle(long n, long p, long q, long k);

}  // namespace toric
