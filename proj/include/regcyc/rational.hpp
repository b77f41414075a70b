#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace regcyc {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// Accepts "p/q", "p" or a finite decimal such as "0.15".
Rational parse_rational(const std::string& text);
/// Always "p/q" with q > 0, even for integers ("3/1").
std::string format_rational(const Rational& q);

std::int64_t floor_int(const Rational& q);
std::int64_t ceil_int(const Rational& q);

/// Sign of a + b*sqrt(x) for x >= 0, decided exactly.
int sign_with_root(const Rational& a, const Rational& b, const Rational& x);
/// Sign of p + q*sqrt(x) + s*sqrt(y) for x, y >= 0, decided exactly.
int sign_with_two_roots(const Rational& p, const Rational& q, const Rational& x, const Rational& s,
                        const Rational& y);

/// Exact square root when x is the square of a rational.
bool rational_sqrt(const Rational& x, Rational& root);

/// Dyadic enclosure lo <= sqrt(x) <= hi with hi - lo <= width.
void sqrt_enclosure(const Rational& x, const Rational& width, Rational& lo, Rational& hi);

}  // namespace regcyc
