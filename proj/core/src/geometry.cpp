#include "schmidt/geometry.hpp"

#include <cmath>
#include <numbers>

#include "schmidt/errors.hpp"

namespace schmidt {

namespace {

void require_dimension(std::size_t a, std::size_t b) {
  if (a != b) {
    throw DimensionMismatch("dimension mismatch: " + std::to_string(a) + " vs " +
                            std::to_string(b));
  }
}

// True iff y > max over the segment {z : |z| <= rho, z.x >= g0} of v.z,
// where x is a unit vector, g0 = gamma*rho/2 and v is given by v.x = p and
// |v|^2 = vsq.
bool exceeds_segment_max(const Rational& y, const Rational& p, const Rational& vsq,
                         const Rational& rho, const Rational& gamma) {
  Rational half_gamma = gamma / 2;
  // The unconstrained maximizer z = rho v/|v| lies in the segment iff
  // p/|v| >= gamma/2.
  if (p >= 0 && p * p >= half_gamma * half_gamma * vsq) {
    return compare_with_sqrt(y, rho, vsq) > 0;
  }
  // Otherwise the maximum is on the rim of the flat face.
  Rational g0 = half_gamma * rho;
  Rational wsq = vsq - p * p;
  Rational rim_sq = rho * rho * (1 - half_gamma * half_gamma);
  return compare_with_sqrt(y - p * g0, Rational(1), wsq * rim_sq) > 0;
}

}  // namespace

Rational default_direction_tolerance() { return Rational(1, Integer(1) << 30); }

Rational nearest_int_dist(const Rational& q) {
  Rational frac = q - Rational(floor(q));
  Rational other = 1 - frac;
  return frac < other ? frac : other;
}

bool ball_contains(const Ball& outer, const Ball& inner) {
  require_dimension(outer.dimension(), inner.dimension());
  if (inner.radius > outer.radius) return false;
  Rational slack = outer.radius - inner.radius;
  return norm_sq(outer.center - inner.center) <= slack * slack;
}

Rational resonance_residual(const Point& p, const Hyperplane& h) {
  return abs(dot(h.normal, p) - Rational(h.offset));
}

bool halfspace_contains_ball(const Halfspace& h, const Ball& b) {
  require_dimension(h.direction.size(), b.dimension());
  return dot(h.direction, b.center - h.anchor) - h.threshold >= b.radius;
}

long double cap_fraction(const Rational& gamma, int n) {
  if (!(gamma > 0 && gamma < 1)) throw InvalidArgument("cap_fraction: gamma must lie in (0,1)");
  if (n < 1) throw InvalidArgument("cap_fraction: dimension must be >= 1");
  if (n == 1) return 0.5L;
  const long double phi = std::asin(to_long_double(gamma) / 2);
  const long double pi = std::numbers::pi_v<long double>;
  if (n == 2) return phi / pi;
  // Ratio of int_0^phi sin^(n-2) to int_0^pi sin^(n-2), by the usual reduction
  //   I_k(x) = -sin^(k-1)(x) cos(x)/k + (k-1)/k I_{k-2}(x).
  const int power = n - 2;
  const long double s = std::sin(phi);
  const long double c = std::cos(phi);
  long double partial = (power % 2 == 0) ? phi : 1 - c;
  long double total = (power % 2 == 0) ? pi : 2;
  for (int k = (power % 2 == 0) ? 2 : 3; k <= power; k += 2) {
    partial = -std::pow(s, k - 1) * c / k + static_cast<long double>(k - 1) / k * partial;
    total = static_cast<long double>(k - 1) / k * total;
  }
  return partial / total;
}

Rational cap_fraction_lower_bound(const Rational& gamma, int n) {
  if (n == 1) {
    cap_fraction(gamma, n);  // range checks
    return Rational(1, 2);
  }
  const long double omega = cap_fraction(gamma, n);
  // The closed forms are accurate to a few ulps of long double; 1e-12 of
  // slack keeps the rounded value strictly below the true one.
  const long double scale = std::ldexp(1.0L, 32);
  const long double scaled = std::floor((omega - 1e-12L) * scale);
  if (scaled < 1) throw InvalidArgument("cap_fraction_lower_bound: cap fraction underflows");
  return Rational(Integer(static_cast<unsigned long long>(scaled)), Integer(1) << 32);
}

Point rational_unit_direction(const Point& v, const Rational& tol) {
  if (!(tol > 0)) throw InvalidArgument("rational_unit_direction: tol must be positive");
  const Rational vsq = norm_sq(v);
  if (vsq == 0) throw InvalidArgument("rational_unit_direction: zero vector");
  const std::size_t n = v.size();

  // v/|v| is already rational when |v|^2 is a rational square.
  {
    Integer num = boost::multiprecision::numerator(vsq);
    Integer den = boost::multiprecision::denominator(vsq);
    Integer rn = isqrt(num);
    Integer rd = isqrt(den);
    if (rn * rn == num && rd * rd == den) return Rational(rd, rn) * v;
  }

  std::size_t axis = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (abs(v[i]) > abs(v[axis])) axis = i;
  }
  const int s = sign(v[axis]);
  const Rational half_tol_sq = tol * tol / 2;
  const Rational cos_floor = 1 - half_tol_sq;

  // Precision in bits: enough for tol, grown until the exact check passes.
  unsigned bits = 16;
  for (Rational t = tol; t < 1; t *= 2) ++bits;
  bits += static_cast<unsigned>(n);
  for (int attempt = 0; attempt < 64; ++attempt, bits += 16) {
    const Rational norm = sqrt_lower(vsq, bits + 8);
    const Rational denom = norm + abs(v[axis]);
    const Integer scale = Integer(1) << bits;
    Point w(n, Rational(0));
    Rational wsq(0);
    for (std::size_t j = 0; j < n; ++j) {
      if (j == axis) continue;
      w[j] = Rational(round_half_even(v[j] / denom * Rational(scale)), scale);
      wsq += w[j] * w[j];
    }
    Point d(n);
    for (std::size_t j = 0; j < n; ++j) {
      d[j] = (j == axis) ? Rational(s * (1 - wsq) / (1 + wsq)) : Rational(2 * w[j] / (1 + wsq));
    }
    // |d - v^|^2 = 2 - 2 d.v/|v| < tol^2  <=>  d.v > (1 - tol^2/2)|v|
    if (compare_with_sqrt(dot(d, v), cos_floor, vsq) > 0) return d;
  }
  throw Error("rational_unit_direction: precision escalation did not converge");
}

Point rational_unit_direction(const IntVector& v, const Rational& tol) {
  return rational_unit_direction(to_point(v), tol);
}

bool min_residual_exceeds(const Ball& ball, const Hyperplane& h, const Rational& margin) {
  // |u.c - a| - radius*|u| > margin
  return compare_with_sqrt(resonance_residual(ball.center, h) - margin, ball.radius,
                           Rational(h.norm_sq())) > 0;
}

bool distance_exceeds(const Ball& ball, const Hyperplane& h, const Rational& distance) {
  // |u.c - a| > (radius + distance)|u|
  return compare_with_sqrt(resonance_residual(ball.center, h), ball.radius + distance,
                           Rational(h.norm_sq())) > 0;
}

bool segment_residual_exceeds(const Ball& ball, const Point& direction, const Rational& gamma,
                              const Hyperplane& h, const Rational& margin) {
  require_dimension(ball.dimension(), direction.size());
  require_dimension(ball.dimension(), h.normal.size());
  // u.z - a = u.(z - c) - D with D = a - u.c; the range of u.(z - c) over the
  // segment is [-max(-u), max(u)].
  const Rational big_d = Rational(h.offset) - dot(h.normal, ball.center);
  const Rational p = dot(h.normal, direction);
  const Rational vsq(h.norm_sq());
  return exceeds_segment_max(big_d - margin, p, vsq, ball.radius, gamma) ||
         exceeds_segment_max(-big_d - margin, -p, vsq, ball.radius, gamma);
}

Point project_onto(const Point& p, const Hyperplane& h) {
  const Rational excess = dot(h.normal, p) - Rational(h.offset);
  return p - (excess / Rational(h.norm_sq())) * to_point(h.normal);
}

}  // namespace schmidt
