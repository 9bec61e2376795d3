#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "schmidt/psi_spec.hpp"
#include "schmidt/resonance.hpp"

namespace schmidt {

enum class Functional { kTheorem1, kJarnik };

const char* functional_name(Functional f);
Functional parse_functional(const std::string& name);

// Exact minimum of a badness functional over 0 < max|x_i| <= N.
//
// theorem1: value = (max_j ||L_j(x) - eta_j||)^n (max_i |x_i|)^m.
// jarnik:   d * rho(s) with d = max_j ||L_j(x) - eta_j||, s = max_i |x_i|
//           and rho the inverse of t -> 1/psi(t). For psi = c t^(-p/q) the
//           reported value is the p-th power d^p (c s)^q, so no fractional
//           power is ever formed; `power` records p. For tables the value is
//           d * rho(s) itself (power 1).
struct BadnessReport {
  Functional kind = Functional::kTheorem1;
  std::int64_t N = 0;
  std::vector<std::int64_t> minimizer;
  Rational value;
  Integer power{1};
  std::uint64_t enumerated = 0;
  std::optional<Integer> validity_bound;
  bool beyond_validity = false;
  std::vector<std::string> warnings;
};

// Ties in value go to the lexicographically smallest x.
BadnessReport theorem1_constant(const ThetaMatrix& theta, const Point& eta, std::int64_t N);
BadnessReport jarnik_constant(const ThetaMatrix& theta, const Point& eta, const PsiSpec& psi,
                              std::int64_t N);

// rho(s) for a table: the largest t with psi(t) >= 1/s under the step
// convention of PsiTable; clamps to the first abscissa when no t qualifies.
// Throws TableRangeExceeded when psi stays >= 1/s past the last abscissa.
Integer table_rho(const PsiTable& table, const Integer& s);

// min over r <= r_max of ||u^(r) . eta||.
Rational resonance_margin(const ResonanceSequence& lambda, const Point& eta, std::size_t r_max);

}  // namespace schmidt
