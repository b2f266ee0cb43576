#pragma once

#include <vector>

#include "toric/lattice_count.hpp"
#include "toric/polytope.hpp"
#include "toric/unipoly.hpp"

namespace toric {

/// L_0, ..., L_n where L_p(k) = chi(Omega^p(kD)).
///
/// Each L_p is interpolated through the twisted section counts of the dilates k = 1..n+1 and
/// must also reproduce k = n+2 and the untwisted value (-1)^p h^p(Omega^p) at k = 0; otherwise
/// InterpolationInconsistent is thrown. Requires a simple polytope.
std::vector<UniPoly> hilbert_ehrhart_all(const Polytope& poly, const ScanOptions& opts = {});
UniPoly hilbert_ehrhart(const Polytope& poly, long p);

struct ReciprocityWitness {
  bool holds = false;
  Rational lhs;  // L_p(-k)
  Rational rhs;  // (-1)^n L_{n-p}(k)
};

/// L_p(-k) == (-1)^n L_{n-p}(k) on precomputed polynomials.
ReciprocityWitness reciprocity_check(const std::vector<UniPoly>& family, long p, long k);
ReciprocityWitness reciprocity_check(const Polytope& poly, long p, long k);

struct LeadingCoefficientWitness {
  bool holds = false;
  Rational coefficient;  // coefficient of k^n in L_p
  Rational expected;     // C(n, p) * Vol
};

LeadingCoefficientWitness leading_coefficient_check(const std::vector<UniPoly>& family,
                                                    const Rational& volume, long p);
LeadingCoefficientWitness leading_coefficient_check(const Polytope& poly, long p);

}  // namespace toric
