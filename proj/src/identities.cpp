#include "toric/identities.hpp"

#include "toric/bott.hpp"
#include "toric/error.hpp"
#include "toric/lattice_count.hpp"

namespace toric {

namespace {

void require_range(bool ok, const std::string& what) {
  if (!ok) throw ToricError(ErrorKind::OutOfRange, what);
}

IdentityReport make_report(std::string name, std::vector<long> params, BigInt left, BigInt right) {
  IdentityReport r{std::move(name), std::move(params), std::move(left), std::move(right), false};
  r.holds = r.left == r.right;
  return r;
}

}  // namespace

IdentityReport identity_a1(long n, long p) {
  require_range(0 <= p && p <= n, "identity a1 needs 0 <= p <= n");
  BigInt left = 0;
  for (long j = 0; j <= p; ++j) left += sign_pow(p - j) * binomial(n - j, p - j) * binomial(n + 1, j);
  return make_report("a1", {n, p}, left, 1);
}

IdentityReport identity_b1(long n, long p, long k) {
  require_range(0 <= p && p <= n && k >= 1, "identity b1 needs 0 <= p <= n, k >= 1");
  BigInt left = 0;
  for (long j = 0; j <= p; ++j) {
    left += sign_pow(j) * binomial(n - j, p - j) * binomial(n + k - j, k) * binomial(n + 1, j);
  }
  return make_report("b1", {n, p, k}, left, binomial(n + k - p, k) * binomial(k - 1, p));
}

IdentityReport identity_a2(long n, long p) {
  require_range(0 <= p && p <= n, "identity a2 needs 0 <= p <= n");
  BigInt left = 0;
  for (long s = p; s <= n; ++s) left += sign_pow(p + s) * binomial(s, p) * binomial(n + 1, n - s);
  return make_report("a2", {n, p}, left, 1);
}

IdentityReport identity_b2(long n, long p, long k) {
  require_range(0 <= p && p <= n && k >= 1, "identity b2 needs 0 <= p <= n, k >= 1");
  BigInt left = 0;
  for (long s = p; s <= n; ++s) {
    left += binomial(s, p) * binomial(k - 1, s) * binomial(n + 1, n - s);
  }
  return make_report("b2", {n, p, k}, left, binomial(n + k - p, k) * binomial(k - 1, p));
}

IdentityReport appendix_identity(long n, long s, long p) {
  require_range(0 <= s && s <= n && 0 <= p && p <= n, "appendix identity needs 0 <= s, p <= n");
  BigInt left = 0;
  for (long j = 0; j <= n - s; ++j) left += sign_pow(j) * binomial(n - j, p) * binomial(n - s, j);
  return make_report("appendix", {n, s, p}, left, binomial(s, n - p));
}

IdentityReport dehn_sommerville(const Polytope& poly, long p) {
  require_simple(poly);
  const long n = static_cast<long>(poly.dim());
  require_range(0 <= p && p <= n, "Dehn-Sommerville needs 0 <= p <= n");
  const auto f = poly.faces().f_vector();
  BigInt left = 0;
  for (long j = 0; j <= p; ++j) left += sign_pow(j) * binomial(n - j, p - j) * f[n - j];
  BigInt right = 0;
  for (long s = p; s <= n; ++s) right += sign_pow(s) * binomial(s, p) * f[s];
  return make_report("dehn_sommerville", {n, p}, left, right);
}

IdentityReport face_duality_unchecked(const Polytope& poly, long p) {
  const long n = static_cast<long>(poly.dim());
  require_range(0 <= p && p <= n, "face duality needs 0 <= p <= n");
  const auto table = count_table(poly);
  return make_report("face_duality", {n, p}, twisted_by_faces(table, p),
                     twisted_by_interiors(table, p));
}

IdentityReport face_duality(const Polytope& poly, long p) {
  require_simple(poly);
  return face_duality_unchecked(poly, p);
}

std::vector<IdentityReport> identity_window(long nmax, long kmax) {
  std::vector<IdentityReport> out;
  for (long n = 0; n <= nmax; ++n) {
    for (long p = 0; p <= n; ++p) {
      out.push_back(identity_a1(n, p));
      out.push_back(identity_a2(n, p));
      for (long k = 1; k <= kmax; ++k) {
        out.push_back(identity_b1(n, p, k));
        out.push_back(identity_b2(n, p, k));
      }
      for (long s = 0; s <= n; ++s) out.push_back(appendix_identity(n, s, p));
    }
  }
  return out;
}

}  // namespace toric
