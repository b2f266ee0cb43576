#include "toric/bott.hpp"

#include "toric/error.hpp"

namespace toric {

namespace {

std::size_t checked_degree(long p, std::size_t n) {
  if (p < 0 || static_cast<std::size_t>(p) > n) {
    throw ToricError(ErrorKind::OutOfRange,
                     "form degree " + std::to_string(p) + " outside 0.." + std::to_string(n));
  }
  return static_cast<std::size_t>(p);
}

CohomologyTable diagonal_table(std::size_t n, const std::vector<BigInt>& diag) {
  CohomologyTable t;
  t.n = n;
  t.twisted = false;
  t.entries.assign(n + 1, std::vector<BigInt>(n + 1, 0));
  for (std::size_t p = 0; p <= n; ++p) t.entries[p][p] = diag[p];
  return t;
}

}  // namespace

BigInt untwisted_by_faces(std::span<const BigInt> f, long p) {
  const long n = static_cast<long>(f.size()) - 1;
  checked_degree(p, static_cast<std::size_t>(n));
  BigInt sum = 0;
  for (long j = 0; j <= p; ++j) sum += sign_pow(p - j) * binomial(n - j, p - j) * f[n - j];
  return sum;
}

BigInt untwisted_by_interiors(std::span<const BigInt> f, long p) {
  const long n = static_cast<long>(f.size()) - 1;
  checked_degree(p, static_cast<std::size_t>(n));
  BigInt sum = 0;
  for (long s = p; s <= n; ++s) sum += sign_pow(s + p) * binomial(s, p) * f[s];
  return sum;
}

BigInt twisted_by_faces(const FaceCountTable& table, long p) {
  const long n = static_cast<long>(table.closed_by_codim.size()) - 1;
  checked_degree(p, static_cast<std::size_t>(n));
  BigInt sum = 0;
  for (long j = 0; j <= p; ++j) {
    sum += sign_pow(j) * binomial(n - j, p - j) * table.closed_by_codim[j];
  }
  return sum;
}

BigInt twisted_by_interiors(const FaceCountTable& table, long p) {
  const long n = static_cast<long>(table.interior_by_dim.size()) - 1;
  checked_degree(p, static_cast<std::size_t>(n));
  BigInt sum = 0;
  for (long s = p; s <= n; ++s) sum += binomial(s, p) * table.interior_by_dim[s];
  return sum;
}

CohomologyTable bott1_untwisted(const Polytope& poly) {
  require_simple(poly);
  const auto f = poly.faces().f_vector();
  std::vector<BigInt> diag;
  for (std::size_t p = 0; p <= poly.dim(); ++p) diag.push_back(untwisted_by_faces(f, static_cast<long>(p)));
  return diagonal_table(poly.dim(), diag);
}

CohomologyTable bott2_untwisted(const Polytope& poly) {
  require_simple(poly);
  const auto f = poly.faces().f_vector();
  std::vector<BigInt> diag;
  for (std::size_t p = 0; p <= poly.dim(); ++p) diag.push_back(untwisted_by_interiors(f, static_cast<long>(p)));
  return diagonal_table(poly.dim(), diag);
}

BigInt bott1_twisted(const Polytope& poly, long p) {
  require_simple(poly);
  checked_degree(p, poly.dim());
  return twisted_by_faces(count_table(poly), p);
}

BigInt bott2_twisted(const Polytope& poly, long p) {
  require_simple(poly);
  checked_degree(p, poly.dim());
  return twisted_by_interiors(count_table(poly), p);
}

CohomologyTable twisted_table(const Polytope& poly, BottFormula formula) {
  require_simple(poly);
  const auto table = count_table(poly);
  CohomologyTable t;
  t.n = poly.dim();
  t.twisted = true;
  t.entries.assign(t.n + 1, std::vector<BigInt>(t.n + 1, 0));
  for (std::size_t p = 0; p <= t.n; ++p) {
    const long lp = static_cast<long>(p);
    t.entries[p][0] = formula == BottFormula::FaceSums ? twisted_by_faces(table, lp)
                                                       : twisted_by_interiors(table, lp);
  }
  return t;
}

GeneratingPolys generating_polys(const Polytope& poly) {
  require_simple(poly);
  const auto f = poly.faces().f_vector();
  const auto table = count_table(poly);
  GeneratingPolys g;
  for (std::size_t j = 0; j < f.size(); ++j) {
    g.untwisted += UniPoly::binomial_power(Rational(-1), static_cast<unsigned>(j)) * Rational(f[j]);
  }
  for (std::size_t s = 0; s < table.interior_by_dim.size(); ++s) {
    g.twisted += UniPoly::binomial_power(Rational(1), static_cast<unsigned>(s)) *
                 Rational(table.interior_by_dim[s]);
  }
  for (std::size_t p = 0; p <= poly.dim(); ++p) {
    const long lp = static_cast<long>(p);
    if (g.untwisted.coefficient(p) != Rational(untwisted_by_faces(f, lp)) ||
        g.twisted.coefficient(p) != Rational(twisted_by_faces(table, lp))) {
      throw ToricError(ErrorKind::RouteMismatch,
                       "generating polynomial coefficient " + std::to_string(p) +
                           " disagrees with the cohomology table");
    }
  }
  return g;
}

BigInt pn_oracle(long n, long p, long q, long k) {
  if (k == 0) return p == q ? 1 : 0;
  if (q == 0 && k > p) return binomial(n + k - p, k) * binomial(k - 1, p);
  if (q == n && k < p - n) return binomial(-k + p, -k) * binomial(-k - 1, n - p);
  return 0;
}

}  // namespace toric
