#pragma once

#include <string>
#include <vector>

#include "toric/numeric.hpp"
#include "toric/polytope.hpp"

namespace toric {

struct IdentityReport {
  std::string name;
  std::vector<long> params;
  BigInt left;
  BigInt right;
  bool holds = false;
};

// Binomial identities behind the projective-space case. Preconditions 0 <= p <= n, k >= 1,
// 0 <= s <= n throw OutOfRange.

/// sum_{j=0}^p (-1)^(p-j) C(n-j, p-j) C(n+1, j) = 1
IdentityReport identity_a1(long n, long p);
/// sum_{j=0}^p (-1)^j C(n-j, p-j) C(n+k-j, k) C(n+1, j) = C(n+k-p, k) C(k-1, p)
IdentityReport identity_b1(long n, long p, long k);
/// sum_{s=p}^n (-1)^(p+s) C(s, p) C(n+1, n-s) = 1
IdentityReport identity_a2(long n, long p);
/// sum_{s=p}^n C(s, p) C(k-1, s) C(n+1, n-s) = C(n+k-p, k) C(k-1, p)
IdentityReport identity_b2(long n, long p, long k);
/// sum_{j=0}^{n-s} (-1)^j C(n-j, p) C(n-s, j) = C(s, n-p)
IdentityReport appendix_identity(long n, long s, long p);

/// Face-count identity sum_j (-1)^j C(n-j,p-j) f_{n-j} = sum_s (-1)^s C(s,p) f_s. Needs a simple polytope.
IdentityReport dehn_sommerville(const Polytope& poly, long p);
/// Closed-face sums vs interior sums of the two twisted formulas. Needs a simple polytope.
IdentityReport face_duality(const Polytope& poly, long p);
/// face_duality without the simplicity gate, for negative controls.
IdentityReport face_duality_unchecked(const Polytope& poly, long p);

/// All five parametric identities for 0 <= s, p <= n <= nmax and 1 <= k <= kmax.
std::vector<IdentityReport> identity_window(long nmax, long kmax);

}  // namespace toric
