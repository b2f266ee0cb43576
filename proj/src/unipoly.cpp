#include "toric/unipoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace toric {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly UniPoly::binomial_power(const Rational& shift, unsigned e) {
  std::vector<Rational> c(e + 1);
  Rational power = 1;
  // (x + a)^e = sum_i C(e, i) a^(e-i) x^i
  for (unsigned i = 0; i <= e; ++i) {
    c[e - i] = Rational(binomial(static_cast<std::int64_t>(e), static_cast<std::int64_t>(i))) * power;
    power *= shift;
  }
  return UniPoly(std::move(c));
}

Rational UniPoly::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

Rational UniPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::reflected() const {
  auto c = coeffs_;
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  return UniPoly(std::move(c));
}

bool UniPoly::integer_valued() const {
  // Forward differences at 0 are the binomial-basis coordinates.
  const std::size_t n = coeffs_.size();
  std::vector<Rational> values;
  for (std::size_t k = 0; k < n; ++k) values.push_back((*this)(Rational(k)));
  for (std::size_t level = 0; level < n; ++level) {
    if (denominator(values[0]) != 1) return false;
    for (std::size_t i = 0; i + 1 < values.size(); ++i) values[i] = values[i + 1] - values[i];
    values.pop_back();
  }
  return true;
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(c));
}

std::vector<std::string> UniPoly::to_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(toric::to_string(c));
  return out;
}

std::string UniPoly::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Rational& c = coeffs_[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) {
      const auto s = toric::to_string(mag);
      const bool paren = i > 0 && s.find('/') != std::string::npos;
      os << (paren ? "(" : "") << s << (paren ? ")" : "");
    }
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

UniPoly lagrange_interpolate(std::span<const std::pair<Rational, Rational>> points) {
  UniPoly result;
  for (std::size_t i = 0; i < points.size(); ++i) {
    UniPoly basis(std::vector<Rational>{1});
    Rational denom = 1;
    for (std::size_t j = 0; j < points.size(); ++j) {
      if (i == j) continue;
      basis = basis * UniPoly(std::vector<Rational>{-points[j].first, 1});
      denom *= points[i].first - points[j].first;
    }
    if (denom == 0) throw std::invalid_argument("interpolation nodes must be distinct");
    result += basis * (points[i].second / denom);
  }
  return result;
}

}  // namespace toric
