#include "schmidt/rational.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "schmidt/errors.hpp"

namespace schmidt {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

std::string to_string(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

Integer parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) {
    throw InvalidArgument("not an integer: '" + std::string(s) + "'");
  }
  Integer z{std::string(s)};
  return negative ? Integer(-z) : z;
}

Rational parse_decimal(std::string_view s) {
  int exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    exponent = static_cast<int>(parse_integer(s.substr(e + 1)).convert_to<long>());
    s = s.substr(0, e);
  }
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
        (whole.empty() && frac.empty())) {
      throw InvalidArgument("malformed decimal: '" + std::string(s) + "'");
    }
    digits = std::string(whole) + std::string(frac);
    exponent -= static_cast<int>(frac.size());
  } else {
    if (!all_digits(s)) throw InvalidArgument("malformed number: '" + std::string(s) + "'");
    digits = std::string(s);
  }
  Rational value{Integer(digits)};
  Rational ten(10);
  value *= exponent >= 0 ? pow(ten, exponent) : Rational(1) / pow(ten, -exponent);
  return negative ? Rational(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw InvalidArgument("empty rational");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer p = parse_integer(text.substr(0, slash));
    Integer q = parse_integer(text.substr(slash + 1));
    if (q == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
    return Rational(p, q);
  }
  return parse_decimal(text);
}

Integer floor(const Rational& q) {
  Integer n = numerator(q);
  Integer d = denominator(q);
  Integer f = n / d;
  if (n < 0 && f * d != n) f -= 1;
  return f;
}

Integer ceil(const Rational& q) { return -floor(Rational(-q)); }

Integer round_half_even(const Rational& q) {
  Integer f = floor(q);
  Rational frac = q - Rational(f);
  Rational half(1, 2);
  if (frac > half) return f + 1;
  if (frac < half) return f;
  return (f % 2 == 0) ? f : Integer(f + 1);
}

Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }
int sign(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }
int sign(const Integer& z) { return z > 0 ? 1 : (z < 0 ? -1 : 0); }

Rational pow(const Rational& base, std::uint64_t exponent) {
  Rational result(1);
  Rational b = base;
  while (exponent > 0) {
    if (exponent & 1) result *= b;
    exponent >>= 1;
    if (exponent > 0) b *= b;
  }
  return result;
}

Integer pow(const Integer& base, std::uint64_t exponent) {
  Integer result(1);
  Integer b = base;
  while (exponent > 0) {
    if (exponent & 1) result *= b;
    exponent >>= 1;
    if (exponent > 0) b *= b;
  }
  return result;
}

Integer isqrt(const Integer& z) {
  if (z < 0) throw InvalidArgument("isqrt of a negative integer");
  return boost::multiprecision::sqrt(z);
}

Rational sqrt_upper(const Integer& z, unsigned bits) {
  Integer scale = Integer(1) << bits;
  Integer root = isqrt(z * scale * scale);
  if (root * root != z * scale * scale) root += 1;
  return Rational(root, scale);
}

Rational sqrt_lower(const Rational& q, unsigned bits) {
  if (q < 0) throw InvalidArgument("sqrt of a negative rational");
  Integer n = numerator(q);
  Integer d = denominator(q);
  // sqrt(n/d) = sqrt(n*d)/d
  Integer scale = Integer(1) << bits;
  return Rational(isqrt(n * d * scale * scale), d * scale);
}

int compare_with_sqrt(const Rational& x, const Rational& c, const Rational& s) {
  if (s < 0) throw InvalidArgument("compare_with_sqrt: negative radicand");
  int rhs = (s == 0) ? 0 : sign(c);
  int lhs = sign(x);
  if (lhs >= 0 && rhs <= 0) return (lhs == 0 && rhs == 0) ? 0 : 1;
  if (lhs <= 0 && rhs >= 0) return -1;
  Rational x2 = x * x;
  Rational r2 = c * c * s;
  int cmp = x2 > r2 ? 1 : (x2 < r2 ? -1 : 0);
  return lhs > 0 ? cmp : -cmp;
}

namespace {
void require_same_size(std::size_t a, std::size_t b) {
  if (a != b) {
    throw DimensionMismatch("dimension mismatch: " + std::to_string(a) + " vs " +
                            std::to_string(b));
  }
}
}  // namespace

Rational dot(const Point& a, const Point& b) {
  require_same_size(a.size(), b.size());
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(const IntVector& u, const Point& p) {
  require_same_size(u.size(), p.size());
  Rational s(0);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] != 0) s += Rational(u[i]) * p[i];
  }
  return s;
}

Rational norm_sq(const Point& p) { return dot(p, p); }

Integer norm_sq(const IntVector& u) {
  Integer s(0);
  for (const auto& x : u) s += x * x;
  return s;
}

Point to_point(const IntVector& u) {
  Point p;
  p.reserve(u.size());
  for (const auto& x : u) p.emplace_back(x);
  return p;
}

Point operator+(const Point& a, const Point& b) {
  require_same_size(a.size(), b.size());
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Point operator-(const Point& a, const Point& b) {
  require_same_size(a.size(), b.size());
  Point r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Point operator*(const Rational& s, const Point& p) {
  Point r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = s * p[i];
  return r;
}

bool lex_positive(const IntVector& u) {
  for (const auto& x : u) {
    if (x != 0) return x > 0;
  }
  return false;
}

bool lex_less(const Point& a, const Point& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

long double to_long_double(const Rational& q) { return q.convert_to<long double>(); }

Rational from_double(double value) { return Rational(value); }

}  // namespace schmidt
