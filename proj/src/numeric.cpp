#include "toric/numeric.hpp"

#include <utility>

#include "toric/error.hpp"

namespace toric {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Empty: return "Empty";
    case ErrorKind::LowDimensional: return "LowDimensional";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NonPositiveDilation: return "NonPositiveDilation";
    case ErrorKind::NotSimple: return "NotSimple";
    case ErrorKind::UnknownFace: return "UnknownFace";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::InterpolationInconsistent: return "InterpolationInconsistent";
    case ErrorKind::RouteMismatch: return "RouteMismatch";
    case ErrorKind::NegativeEntry: return "NegativeEntry";
    case ErrorKind::HodgeAsymmetric: return "HodgeAsymmetric";
    case ErrorKind::EmptyPolytope: return "EmptyPolytope";
    case ErrorKind::NonLatticeVertex: return "NonLatticeVertex";
    case ErrorKind::InputFormat: return "InputFormat";
  }
  return "Unknown";
}

std::string to_string(const BigInt& z) { return z.str(); }

std::string to_string(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(BigInt(text));
    const BigInt num(text.substr(0, slash));
    const BigInt den(text.substr(slash + 1));
    if (den == 0) throw ToricError(ErrorKind::InputFormat, "zero denominator in '" + text + "'");
    // Boost rejects negative denominators.
    return den < 0 ? Rational(-num, -den) : Rational(num, den);
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const ToricError*>(&e) != nullptr) throw;
    throw ToricError(ErrorKind::InputFormat, "not a rational number: '" + text + "'");
  }
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) {
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
  return q;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(a, b);
}

BigInt binomial(const BigInt& a, std::int64_t b) {
  if (b < 0) return 0;
  BigInt num = 1;
  BigInt den = 1;
  for (std::int64_t i = 0; i < b; ++i) {
    num *= a - i;
    den *= i + 1;
  }
  return num / den;
}

BigInt determinant(std::vector<std::vector<BigInt>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

std::size_t rank(std::vector<std::vector<BigInt>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  BigInt prev = 1;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t pivot = r;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        rows[i][j] = (rows[i][j] * rows[r][c] - rows[i][c] * rows[r][j]) / prev;
      }
      rows[i][c] = 0;
    }
    prev = rows[r][c];
    ++r;
  }
  return r;
}

}  // namespace toric
