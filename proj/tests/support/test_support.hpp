#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "schmidt/rational.hpp"
#include "schmidt/resonance.hpp"

namespace schmidt::testing {

inline Rational Q(long long p, long long q = 1) { return Rational(p, q); }

inline Point P(std::initializer_list<Rational> xs) { return Point(xs); }

inline IntVector U(std::initializer_list<long long> xs) {
  IntVector u;
  for (auto x : xs) u.emplace_back(x);
  return u;
}

// Uniform rational p/den with p in [lo*den, hi*den].
inline Rational random_rational(std::mt19937_64& rng, long long lo, long long hi, long long den) {
  std::uniform_int_distribution<long long> d(lo * den, hi * den);
  return Rational(d(rng), den);
}

// alpha in (0, 1/2), beta in (0, 1), with small denominators.
inline std::pair<Rational, Rational> random_alpha_beta(std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> den(3, 40);
  const long long da = den(rng);
  const long long db = den(rng);
  std::uniform_int_distribution<long long> na(1, (da - 1) / 2);
  std::uniform_int_distribution<long long> nb(1, db - 1);
  Rational a(na(rng), da);
  if (a * 2 >= 1) a = Rational(1, 3);
  return {a, Rational(nb(rng), db)};
}

inline Point random_point(std::mt19937_64& rng, std::size_t n, long long den = 64) {
  Point p;
  for (std::size_t i = 0; i < n; ++i) p.push_back(random_rational(rng, -1, 1, den));
  return p;
}

inline IntVector random_normal(std::mt19937_64& rng, std::size_t n, long long bound = 9) {
  std::uniform_int_distribution<long long> d(-bound, bound);
  IntVector u(n);
  do {
    for (auto& x : u) x = d(rng);
  } while (norm_sq(u) == 0);
  return u;
}

// The golden-thread resonance sequence: sizes 1, 3, 13, 55, 233, 987 with M = 3.
inline ResonanceSequence golden_lambda() {
  return ResonanceSequence::from_sizes({Integer(1), Integer(3), Integer(13), Integer(55), Integer(233), Integer(987)},
                                       Rational(3));
}

// min of z.y over the spherical cap {z in S : z.x >= g}, for unit x, y.
// Either -y lies in the cap, or the minimum sits on the rim.
inline double cap_min_dot(const std::vector<double>& x, const std::vector<double>& y, double g) {
  double c = 0;
  for (std::size_t i = 0; i < x.size(); ++i) c += x[i] * y[i];
  if (-c >= g) return -1;
  const double s = std::sqrt(std::max(0.0, 1 - c * c));
  return g * c - std::sqrt(1 - g * g) * s;
}

inline std::vector<double> random_unit(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> gauss;
  std::vector<double> v(static_cast<std::size_t>(n));
  double len = 0;
  do {
    len = 0;
    for (auto& x : v) {
      x = gauss(rng);
      len += x * x;
    }
  } while (len == 0);
  len = std::sqrt(len);
  for (auto& x : v) x /= len;
  return v;
}

// Fraction of uniform directions y whose half-space {z : z.y >= 0} swallows
// the cap {z in S : z.e_1 >= gamma/2}.
inline double monte_carlo_cap_fraction(double gamma, int n, long samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<double> x(static_cast<std::size_t>(n), 0.0);
  x[0] = 1;
  long hits = 0;
  for (long i = 0; i < samples; ++i) {
    if (cap_min_dot(x, random_unit(rng, n), gamma / 2) >= 0) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(samples);
}

}  // namespace schmidt::testing
