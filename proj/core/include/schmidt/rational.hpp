#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "boost/multiprecision/gmp.hpp"

namespace schmidt {

// Expression templates are off: values are stored in containers and captured
// by `auto` all over the place.
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

using Point = std::vector<Rational>;
using IntVector = std::vector<Integer>;

// Always "p/q", including integers ("3/1") and zero ("0/1").
std::string to_string(const Rational& q);

// Accepts "p/q", "p", and finite decimals such as "-2.25" or "1e-3".
Rational parse_rational(std::string_view text);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);
// Nearest integer, ties to even.
Integer round_half_even(const Rational& q);

Rational abs(const Rational& q);
int sign(const Rational& q);
int sign(const Integer& z);

Rational pow(const Rational& base, std::uint64_t exponent);
Integer pow(const Integer& base, std::uint64_t exponent);

// floor(sqrt(z)) for z >= 0.
Integer isqrt(const Integer& z);

// Rational upper bound on sqrt(z), within 2^-bits of the true value.
Rational sqrt_upper(const Integer& z, unsigned bits = 64);
// Rational lower bound on sqrt(q) for q >= 0, within relative 2^-bits.
Rational sqrt_lower(const Rational& q, unsigned bits = 64);

// Exact sign of x - c * sqrt(s), with s >= 0.
int compare_with_sqrt(const Rational& x, const Rational& c, const Rational& s);

Rational dot(const Point& a, const Point& b);
Rational dot(const IntVector& u, const Point& p);
Rational norm_sq(const Point& p);
Integer norm_sq(const IntVector& u);

Point to_point(const IntVector& u);
Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator*(const Rational& s, const Point& p);

// Lexicographic order; the first nonzero entry of `u` is positive.
bool lex_positive(const IntVector& u);
bool lex_less(const Point& a, const Point& b);

long double to_long_double(const Rational& q);
Rational from_double(double value);

}  // namespace schmidt
