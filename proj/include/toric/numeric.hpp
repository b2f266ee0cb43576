#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace toric {

using BigInt = boost::multiprecision::cpp_int;
// Always normalized: lowest terms, positive denominator.
using Rational = boost::multiprecision::cpp_rational;

/// "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

/// Parses "a" or "a/b" into a normalized rational. Throws InputFormat.
Rational parse_rational(const std::string& text);

BigInt floor_div(const BigInt& a, const BigInt& b);
BigInt ceil_div(const BigInt& a, const BigInt& b);

BigInt gcd(const BigInt& a, const BigInt& b);

/// Generalized binomial: 0 for b < 0, otherwise a(a-1)...(a-b+1)/b! for any integer a.
BigInt binomial(const BigInt& a, std::int64_t b);
inline BigInt binomial(std::int64_t a, std::int64_t b) { return binomial(BigInt(a), b); }

inline int sign_pow(std::int64_t e) { return (e % 2 == 0) ? 1 : -1; }

/// Determinant of a square integer matrix (Bareiss, fraction-free).
BigInt determinant(std::vector<std::vector<BigInt>> m);

/// Rank of an integer matrix given as rows.
std::size_t rank(std::vector<std::vector<BigInt>> rows);

}  // namespace toric
