#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "schmidt/psi_spec.hpp"
#include "schmidt/rational.hpp"

namespace schmidt {

// theta_{i,j}, 1 <= i <= m, 1 <= j <= n, stored row-major. The linear forms
// are L_j(x) = sum_i theta_{i,j} x_i for x in Z^m; the transposed system
// sum_j theta_{i,j} y_j for y in Z^n drives the resonance sequence.
struct ThetaMatrix {
  int m = 1;
  int n = 1;
  std::vector<Rational> entries;
  // Continued fraction of an irrational theta (n == m == 1) that `entries`
  // approximates; empty for exact rational inputs.
  std::vector<Integer> continued_fraction;
  // True when the entries stand in for irrational values.
  bool surrogate = false;

  const Rational& at(int i, int j) const { return entries.at(static_cast<std::size_t>(i * n + j)); }
  void validate() const;

  // floor(sqrt(common denominator)) for surrogates; comparisons beyond this
  // size may differ from the irrational theta. Empty for exact inputs.
  std::optional<Integer> validity_bound() const;

  // Convergent p/q of the continued fraction [a0; a1, ..., a_depth].
  static ThetaMatrix from_continued_fraction(const std::vector<Integer>& cf);
  // (sqrt(5) - 1)/2 through its convergent 832040/1346269, flagged as a surrogate.
  static ThetaMatrix golden();
};

// Entries scaled to a common denominator, for integer-only enumeration.
struct ScaledTheta {
  Integer denominator;
  std::vector<Integer> numerators;  // row-major like ThetaMatrix::entries
};
ScaledTheta scale(const ThetaMatrix& theta);

// max_i || sum_j theta_{i,j} y_j ||.
Rational transposed_quality(const ThetaMatrix& theta, const std::vector<std::int64_t>& y);

// min over nonzero integer y with max|y_j| <= t of transposed_quality.
Rational psi_theta(const ThetaMatrix& theta, std::int64_t t);

// Change points of t -> psi_theta(t) for 1 <= t <= t_max: (t, new value).
std::vector<std::pair<std::int64_t, Rational>> psi_theta_steps(const ThetaMatrix& theta,
                                                               std::int64_t t_max);

struct BestApproximation {
  IntVector u;
  Integer norm_sq;
  Rational quality;
};

// Successive records of transposed_quality in increasing Euclidean length
// among y with max|y_j| <= t_max: each beats every strictly shorter vector.
// Only one of y, -y is listed: the one whose first nonzero entry is
// positive. A length shell contributes at most its best vector, the
// lexicographically first on ties. The list stops at the first record of
// quality zero.
std::vector<BestApproximation> best_approximations(const ThetaMatrix& theta, std::int64_t t_max);

// For n == m == 1 with a continued fraction: 1 and the distinct convergent
// denominators q_k (k >= 1) up to t_max.
std::vector<Integer> convergent_denominators(const std::vector<Integer>& cf, const Integer& t_max);

// The lacunary sequence u^(r) with t_r^2 = |u^(r)|^2 and
// M <= t_{r+1}/t_r <= M^2, all stored and compared on squares. Index r is
// 1-based in the accessors, matching the usual numbering.
struct ResonanceSequence {
  std::vector<IntVector> vectors;
  std::vector<Integer> norms_sq;
  Rational M;
  std::vector<std::optional<Rational>> qualities;  // empty for padding vectors

  std::size_t size() const { return vectors.size(); }
  std::size_t dimension() const { return vectors.empty() ? 0 : vectors.front().size(); }
  const IntVector& u(std::size_t r) const { return vectors.at(r - 1); }
  const Integer& t_sq(std::size_t r) const { return norms_sq.at(r - 1); }

  // Throws InvalidArgument on any violated invariant.
  void validate() const;

  // Axis vectors (s, 0, ..., 0) with the given sizes.
  static ResonanceSequence from_sizes(const std::vector<Integer>& sizes, const Rational& M,
                                      std::size_t dimension = 1);
};

// Greedy thinning into the [M, M^2] window. From each kept size t the
// earliest later element with ratio in the window is kept; elements below
// the window are dropped; across a gap beyond M^2 a padding vector
// (s, 0, ..., 0) with s = ceil(M t) is inserted and the scan resumes.
ResonanceSequence lacunary_normalize(const std::vector<BestApproximation>& seq, const Rational& M);

struct HypothesisCheck {
  std::int64_t t;
  Rational psi_theta;
  bool holds;
};

struct HypothesisReport {
  std::vector<HypothesisCheck> checks;
  std::size_t violations = 0;
  bool psi_theta_hits_zero = false;
  std::int64_t checked_up_to = 0;
  std::vector<std::string> warnings;
};

// Empirical check of psi_theta(t) <= psi(t) for t <= t_max, at every change
// point of psi_theta and at the last t before the next change (where the
// inequality is tightest).
HypothesisReport verify_hypothesis(const ThetaMatrix& theta, const PsiSpec& psi,
                                   std::int64_t t_max);

}  // namespace schmidt
