#include "schmidt/resonance.hpp"

#include <algorithm>
#include <numeric>

#include "schmidt/errors.hpp"

namespace schmidt {

using boost::multiprecision::denominator;
using boost::multiprecision::numerator;

void ThetaMatrix::validate() const {
  if (m < 1 || n < 1) throw InvalidArgument("theta needs m, n >= 1");
  if (entries.size() != static_cast<std::size_t>(m * n)) {
    throw InvalidArgument("theta has " + std::to_string(entries.size()) + " entries, expected " +
                          std::to_string(m * n));
  }
}

std::optional<Integer> ThetaMatrix::validity_bound() const {
  if (!surrogate) return std::nullopt;
  return isqrt(scale(*this).denominator);
}

ThetaMatrix ThetaMatrix::from_continued_fraction(const std::vector<Integer>& cf) {
  if (cf.empty()) throw InvalidArgument("empty continued fraction");
  Integer p_prev(1), q_prev(0), p(cf[0]), q(1);
  for (std::size_t k = 1; k < cf.size(); ++k) {
    if (cf[k] < 1) throw InvalidArgument("partial quotients after a0 must be positive");
    Integer p_next = cf[k] * p + p_prev;
    Integer q_next = cf[k] * q + q_prev;
    p_prev = p;
    q_prev = q;
    p = p_next;
    q = q_next;
  }
  ThetaMatrix theta;
  theta.entries = {Rational(p, q)};
  theta.continued_fraction = cf;
  theta.surrogate = true;
  return theta;
}

ThetaMatrix ThetaMatrix::golden() {
  // [0; 1, 1, ...] with 30 ones ends at F30/F31 = 832040/1346269.
  std::vector<Integer> cf(31, Integer(1));
  cf[0] = 0;
  return from_continued_fraction(cf);
}

ScaledTheta scale(const ThetaMatrix& theta) {
  Integer common(1);
  for (const auto& e : theta.entries) {
    common = boost::multiprecision::lcm(common, Integer(denominator(e)));
  }
  ScaledTheta scaled{common, {}};
  scaled.numerators.reserve(theta.entries.size());
  for (const auto& e : theta.entries) {
    scaled.numerators.push_back(numerator(e) * (common / denominator(e)));
  }
  return scaled;
}

namespace {

// Numerator (over s.denominator) of max_i || sum_j theta_ij y_j ||.
Integer scaled_quality(const ScaledTheta& s, int m, int n, const std::int64_t* y) {
  Integer worst(0);
  Integer acc;
  for (int i = 0; i < m; ++i) {
    acc = 0;
    for (int j = 0; j < n; ++j) {
      if (y[j] != 0) acc += s.numerators[static_cast<std::size_t>(i * n + j)] * y[j];
    }
    acc %= s.denominator;
    if (acc < 0) acc += s.denominator;
    Integer other = s.denominator - acc;
    const Integer& dist = acc < other ? acc : other;
    if (dist > worst) worst = dist;
  }
  return worst;
}

bool canonical(const std::vector<std::int64_t>& y) {
  for (auto v : y) {
    if (v != 0) return v > 0;
  }
  return false;
}

// Calls visit(y) for every canonical nonzero y with max|y_j| <= t.
template <typename Visit>
void for_each_canonical(int n, std::int64_t t, Visit&& visit) {
  std::vector<std::int64_t> y(static_cast<std::size_t>(n), -t);
  y[0] = 0;  // canonical vectors never have a negative first entry
  while (true) {
    if (canonical(y)) visit(y);
    int pos = n - 1;
    while (pos >= 0 && y[static_cast<std::size_t>(pos)] == t) {
      y[static_cast<std::size_t>(pos)] = pos == 0 ? 0 : -t;
      --pos;
    }
    if (pos < 0) break;
    ++y[static_cast<std::size_t>(pos)];
  }
}

std::int64_t max_abs(const std::vector<std::int64_t>& y) {
  std::int64_t r = 0;
  for (auto v : y) r = std::max(r, v < 0 ? -v : v);
  return r;
}

}  // namespace

Rational transposed_quality(const ThetaMatrix& theta, const std::vector<std::int64_t>& y) {
  theta.validate();
  if (y.size() != static_cast<std::size_t>(theta.n)) throw DimensionMismatch("y has wrong size");
  ScaledTheta s = scale(theta);
  return Rational(scaled_quality(s, theta.m, theta.n, y.data()), s.denominator);
}

Rational psi_theta(const ThetaMatrix& theta, std::int64_t t) {
  theta.validate();
  if (t < 1) throw InvalidArgument("psi_theta: t must be >= 1");
  ScaledTheta s = scale(theta);
  std::optional<Integer> best;
  for_each_canonical(theta.n, t, [&](const std::vector<std::int64_t>& y) {
    Integer q = scaled_quality(s, theta.m, theta.n, y.data());
    if (!best || q < *best) best = q;
  });
  return Rational(*best, s.denominator);
}

std::vector<std::pair<std::int64_t, Rational>> psi_theta_steps(const ThetaMatrix& theta,
                                                               std::int64_t t_max) {
  theta.validate();
  if (t_max < 1) throw InvalidArgument("psi_theta_steps: t_max must be >= 1");
  ScaledTheta s = scale(theta);
  std::vector<std::optional<Integer>> shell_min(static_cast<std::size_t>(t_max) + 1);
  for_each_canonical(theta.n, t_max, [&](const std::vector<std::int64_t>& y) {
    auto& slot = shell_min[static_cast<std::size_t>(max_abs(y))];
    Integer q = scaled_quality(s, theta.m, theta.n, y.data());
    if (!slot || q < *slot) slot = q;
  });
  std::vector<std::pair<std::int64_t, Rational>> steps;
  std::optional<Integer> running;
  for (std::int64_t t = 1; t <= t_max; ++t) {
    const auto& q = shell_min[static_cast<std::size_t>(t)];
    if (q && (!running || *q < *running)) {
      running = q;
      steps.emplace_back(t, Rational(*q, s.denominator));
    }
  }
  return steps;
}

std::vector<BestApproximation> best_approximations(const ThetaMatrix& theta, std::int64_t t_max) {
  theta.validate();
  if (t_max < 1) throw InvalidArgument("best_approximations: t_max must be >= 1");
  const auto n = static_cast<std::size_t>(theta.n);
  std::vector<std::int64_t> coords;
  std::vector<std::int64_t> lengths;
  for_each_canonical(theta.n, t_max, [&](const std::vector<std::int64_t>& y) {
    coords.insert(coords.end(), y.begin(), y.end());
    std::int64_t len = 0;
    for (auto v : y) len += v * v;
    lengths.push_back(len);
  });
  std::vector<std::size_t> order(lengths.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (lengths[a] != lengths[b]) return lengths[a] < lengths[b];
    return std::lexicographical_compare(coords.begin() + static_cast<std::ptrdiff_t>(a * n),
                                        coords.begin() + static_cast<std::ptrdiff_t>((a + 1) * n),
                                        coords.begin() + static_cast<std::ptrdiff_t>(b * n),
                                        coords.begin() + static_cast<std::ptrdiff_t>((b + 1) * n));
  });

  ScaledTheta s = scale(theta);
  std::vector<BestApproximation> records;
  std::optional<Integer> best;
  for (std::size_t idx : order) {
    const std::int64_t* y = coords.data() + idx * n;
    Integer q = scaled_quality(s, theta.m, theta.n, y);
    if (best && q >= *best) continue;
    best = q;
    BestApproximation rec{IntVector(y, y + n), Integer(lengths[idx]), Rational(q, s.denominator)};
    // Within one length shell only the best vector is a record.
    if (!records.empty() && records.back().norm_sq == rec.norm_sq) {
      records.back() = std::move(rec);
    } else {
      records.push_back(std::move(rec));
    }
    if (q == 0) break;
  }
  return records;
}

std::vector<Integer> convergent_denominators(const std::vector<Integer>& cf, const Integer& t_max) {
  std::vector<Integer> out;
  if (t_max >= 1) out.emplace_back(1);
  Integer q_prev(0), q(1);
  for (std::size_t k = 1; k < cf.size(); ++k) {
    Integer next = cf[k] * q + q_prev;
    q_prev = q;
    q = next;
    if (q > t_max) break;
    if (q != out.back()) out.push_back(q);
  }
  return out;
}

void ResonanceSequence::validate() const {
  if (vectors.empty()) throw InvalidArgument("resonance sequence is empty");
  if (!(M > 1)) throw InvalidArgument("resonance sequence needs M > 1");
  if (norms_sq.size() != vectors.size() || qualities.size() != vectors.size()) {
    throw InvalidArgument("resonance sequence fields have inconsistent lengths");
  }
  const std::size_t n = vectors.front().size();
  const Rational m2 = M * M;
  const Rational m4 = m2 * m2;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != n) throw InvalidArgument("resonance vectors differ in dimension");
    if (norm_sq(vectors[i]) != norms_sq[i] || norms_sq[i] == 0) {
      throw InvalidArgument("t_r^2 must equal |u^(r)|^2 > 0 at r=" + std::to_string(i + 1));
    }
    if (i > 0) {
      Rational ratio(norms_sq[i], norms_sq[i - 1]);
      if (ratio < m2 || ratio > m4) {
        throw InvalidArgument("lacunarity window [M, M^2] violated at r=" + std::to_string(i + 1));
      }
    }
  }
}

ResonanceSequence ResonanceSequence::from_sizes(const std::vector<Integer>& sizes, const Rational& M,
                                                std::size_t dimension) {
  ResonanceSequence seq;
  seq.M = M;
  for (const auto& s : sizes) {
    IntVector u(dimension, Integer(0));
    u[0] = s;
    seq.norms_sq.push_back(s * s);
    seq.vectors.push_back(std::move(u));
    seq.qualities.emplace_back(std::nullopt);
  }
  seq.validate();
  return seq;
}

ResonanceSequence lacunary_normalize(const std::vector<BestApproximation>& seq, const Rational& M) {
  if (seq.empty()) throw EmptySequence("lacunary_normalize: empty input");
  if (!(M > 1)) throw InvalidArgument("lacunary_normalize: M must exceed 1");
  const Rational m2 = M * M;
  const Rational m4 = m2 * m2;
  const std::size_t n = seq.front().u.size();

  ResonanceSequence out;
  out.M = M;
  auto keep = [&](const IntVector& u, const Integer& nsq, std::optional<Rational> quality) {
    out.vectors.push_back(u);
    out.norms_sq.push_back(nsq);
    out.qualities.push_back(std::move(quality));
  };
  keep(seq.front().u, seq.front().norm_sq, seq.front().quality);

  std::size_t i = 1;
  while (i < seq.size()) {
    const Integer& last = out.norms_sq.back();
    const Rational ratio(seq[i].norm_sq, last);
    if (ratio < m2) {
      ++i;
      continue;
    }
    if (ratio <= m4) {
      keep(seq[i].u, seq[i].norm_sq, seq[i].quality);
      ++i;
      continue;
    }
    // Gap: pad with the smallest axis vector that lands in the window.
    const Rational target = m2 * Rational(last);
    Integer s = isqrt(ceil(target));
    while (Rational(s * s) < target) ++s;
    if (Rational(s * s) > m4 * Rational(last)) {
      throw InvalidArgument("lacunary_normalize: no integer size fits the window after t^2=" +
                            last.str());
    }
    IntVector pad(n, Integer(0));
    pad[0] = s;
    keep(pad, s * s, std::nullopt);
  }
  out.validate();
  return out;
}

HypothesisReport verify_hypothesis(const ThetaMatrix& theta, const PsiSpec& psi,
                                   std::int64_t t_max) {
  validate(psi);
  HypothesisReport report;
  auto steps = psi_theta_steps(theta, t_max);
  std::vector<std::pair<std::int64_t, Rational>> points;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    points.push_back(steps[i]);
    const std::int64_t last = i + 1 < steps.size() ? steps[i + 1].first - 1 : t_max;
    if (last > steps[i].first) points.emplace_back(last, steps[i].second);
  }
  for (const auto& [t, value] : points) {
    if (!covers(psi, Integer(t))) {
      report.warnings.push_back("psi table ends before t_max; checks truncated at t=" +
                                std::to_string(report.checked_up_to));
      break;
    }
    const bool holds = psi_bounds(psi, Integer(t), value);
    if (!holds) ++report.violations;
    if (value == 0) report.psi_theta_hits_zero = true;
    report.checks.push_back(HypothesisCheck{t, value, holds});
    report.checked_up_to = t;
  }
  if (report.psi_theta_hits_zero) {
    report.warnings.push_back("psi_theta reaches 0: theta is rational at this scale");
  }
  return report;
}

}  // namespace schmidt
