#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "toric/numeric.hpp"

namespace toric {

/// Univariate polynomial with exact rational coefficients; coeffs[i] multiplies x^i.
/// Trailing zero coefficients are trimmed, so the zero polynomial has no coefficients.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);

  /// (x + shift)^e, expanded.
  static UniPoly binomial_power(const Rational& shift, unsigned e);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Coefficient of x^i (zero past the degree).
  Rational coefficient(std::size_t i) const;
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

  Rational operator()(const Rational& x) const;

  /// p(-x).
  UniPoly reflected() const;
  /// True iff p(k) is an integer for every integer k, checked in the binomial basis.
  bool integer_valued() const;

  UniPoly& operator+=(const UniPoly& rhs);
  UniPoly& operator*=(const Rational& c);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  /// Coefficients as exact strings, lowest power first.
  std::vector<std::string> to_strings() const;
  std::string to_string(const std::string& var = "k") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Unique polynomial of degree < points.size() through the given (x, y) pairs.
UniPoly lagrange_interpolate(std::span<const std::pair<Rational, Rational>> points);

}  // namespace toric
