#include "toric/hilbert_ehrhart.hpp"

#include <utility>

#include "toric/bott.hpp"
#include "toric/error.hpp"

namespace toric {

namespace {

void check_degree(long p, std::size_t n) {
  if (p < 0 || static_cast<std::size_t>(p) > n) {
    throw ToricError(ErrorKind::OutOfRange,
                     "form degree " + std::to_string(p) + " outside 0.." + std::to_string(n));
  }
}

}  // namespace

std::vector<UniPoly> hilbert_ehrhart_all(const Polytope& poly, const ScanOptions& opts) {
  require_simple(poly);
  const std::size_t n = poly.dim();
  const std::size_t nodes = n + 1;

  // values[p][k-1] = h^0(Omega^p(kD)) for k = 1..n+2
  std::vector<std::vector<BigInt>> values(n + 1);
  for (std::size_t k = 1; k <= nodes + 1; ++k) {
    const auto table = count_table(dilate(poly, k), opts);
    for (std::size_t p = 0; p <= n; ++p) {
      values[p].push_back(twisted_by_interiors(table, static_cast<long>(p)));
    }
  }

  const auto f = poly.faces().f_vector();
  std::vector<UniPoly> family;
  family.reserve(n + 1);
  for (std::size_t p = 0; p <= n; ++p) {
    std::vector<std::pair<Rational, Rational>> pts;
    for (std::size_t k = 1; k <= nodes; ++k) pts.emplace_back(Rational(k), Rational(values[p][k - 1]));
    UniPoly poly_p = lagrange_interpolate(pts);

    const Rational check_at = Rational(nodes + 1);
    if (poly_p(check_at) != Rational(values[p][nodes])) {
      throw ToricError(ErrorKind::InterpolationInconsistent,
                       "L_" + std::to_string(p) + " misses the verification node k = " +
                           std::to_string(nodes + 1));
    }
    const Rational at_zero = Rational(sign_pow(static_cast<long>(p)) *
                                      untwisted_by_faces(f, static_cast<long>(p)));
    if (poly_p(Rational(0)) != at_zero) {
      throw ToricError(ErrorKind::InterpolationInconsistent,
                       "L_" + std::to_string(p) + "(0) = " + to_string(poly_p(Rational(0))) +
                           " but (-1)^p h^p(Omega^p) = " + to_string(at_zero));
    }
    family.push_back(std::move(poly_p));
  }
  return family;
}

UniPoly hilbert_ehrhart(const Polytope& poly, long p) {
  check_degree(p, poly.dim());
  return hilbert_ehrhart_all(poly).at(static_cast<std::size_t>(p));
}

ReciprocityWitness reciprocity_check(const std::vector<UniPoly>& family, long p, long k) {
  const std::size_t n = family.size() - 1;
  check_degree(p, n);
  ReciprocityWitness w;
  w.lhs = family[static_cast<std::size_t>(p)](Rational(-k));
  w.rhs = family[n - static_cast<std::size_t>(p)](Rational(k)) * sign_pow(static_cast<long>(n));
  w.holds = w.lhs == w.rhs;
  return w;
}

ReciprocityWitness reciprocity_check(const Polytope& poly, long p, long k) {
  check_degree(p, poly.dim());
  if (k < 1) throw ToricError(ErrorKind::OutOfRange, "reciprocity needs k >= 1");
  return reciprocity_check(hilbert_ehrhart_all(poly), p, k);
}

LeadingCoefficientWitness leading_coefficient_check(const std::vector<UniPoly>& family,
                                                    const Rational& vol, long p) {
  const std::size_t n = family.size() - 1;
  check_degree(p, n);
  LeadingCoefficientWitness w;
  w.coefficient = family[static_cast<std::size_t>(p)].coefficient(n);
  w.expected = Rational(binomial(static_cast<long>(n), p)) * vol;
  w.holds = w.coefficient == w.expected;
  return w;
}

LeadingCoefficientWitness leading_coefficient_check(const Polytope& poly, long p) {
  check_degree(p, poly.dim());
  return leading_coefficient_check(hilbert_ehrhart_all(poly), volume(poly), p);
}

}  // namespace toric
