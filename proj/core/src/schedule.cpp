#include "schmidt/schedule.hpp"

#include <cmath>

#include "schmidt/errors.hpp"

namespace schmidt {

namespace {
constexpr int kMaxK = 1 << 20;
}

int escape_rounds(const Rational& alpha, const Rational& beta) {
  const Rational ab = alpha * beta;
  const Rational half_gamma = (1 + ab - 2 * alpha) / 2;
  if (!(half_gamma > 0) || !(ab > 0 && ab < 1)) {
    throw InvalidArgument("escape_rounds: need gamma > 0 and 0 < alpha*beta < 1");
  }
  // Floating guess, then exact correction in both directions.
  double guess = std::ceil(std::log(to_long_double(half_gamma)) / std::log(to_long_double(ab)));
  int t = std::max(1, static_cast<int>(guess));
  while (!(pow(ab, static_cast<std::uint64_t>(t)) < half_gamma)) ++t;
  while (t > 1 && pow(ab, static_cast<std::uint64_t>(t - 1)) < half_gamma) --t;
  return t;
}

int subblock_count(int k, const Rational& omega_lb) {
  if (k < 1) throw InvalidArgument("subblock_count: k must be >= 1");
  if (!(omega_lb > 0 && omega_lb < 1)) throw InvalidArgument("subblock_count: omega outside (0,1)");
  const Rational keep = 1 - omega_lb;
  auto enough = [&](int L) { return Rational(k) * pow(keep, static_cast<std::uint64_t>(L)) <= 1; };
  const long double guess =
      std::ceil(std::log(static_cast<long double>(k)) / -std::log(to_long_double(keep)));
  int L = std::max(0, static_cast<int>(guess));
  while (!enough(L)) ++L;
  while (L > 0 && enough(L - 1)) --L;
  return L;
}

bool block_length_condition(int k, int tau, const Rational& alpha_beta, const Rational& M) {
  if (k <= 2) return false;
  return pow(1 / alpha_beta, static_cast<std::uint64_t>(tau)) <
         pow(M, static_cast<std::uint64_t>(k - 2));
}

StrategyParams derive_params(const Rational& alpha, const Rational& beta, const Rational& M,
                             int dimension, std::optional<int> k_override) {
  if (!(alpha > 0 && alpha < Rational(1, 2))) {
    throw InvalidArgument("alpha must lie in (0, 1/2), got " + to_string(alpha));
  }
  if (!(beta > 0 && beta < 1)) throw InvalidArgument("beta must lie in (0, 1), got " + to_string(beta));
  if (!(M > 1)) throw InvalidArgument("M must exceed 1, got " + to_string(M));
  if (dimension < 1) throw InvalidArgument("dimension must be >= 1");

  StrategyParams p;
  p.alpha = alpha;
  p.beta = beta;
  p.M = M;
  p.dimension = dimension;
  p.gamma = 1 + alpha * beta - 2 * alpha;
  p.omega = cap_fraction(p.gamma, dimension);
  p.omega_lb = cap_fraction_lower_bound(p.gamma, dimension);
  p.t_escape = escape_rounds(alpha, beta);

  auto tau_for = [&](int k) { return p.t_escape * subblock_count(k, p.omega_lb); };
  if (k_override) {
    const int k = *k_override;
    if (k < 1 || !block_length_condition(k, tau_for(k), p.shrink(), M)) {
      throw InvalidArgument("k override " + std::to_string(k) + " violates the block-length condition");
    }
    p.k = k;
  } else {
    for (int k = 1; k <= kMaxK; ++k) {
      if (block_length_condition(k, tau_for(k), p.shrink(), M)) {
        p.k = k;
        break;
      }
    }
    if (p.k == 0) throw InvalidArgument("no k up to 2^20 satisfies the block-length condition");
  }
  p.subblocks = subblock_count(p.k, p.omega_lb);
  p.tau_k = p.t_escape * p.subblocks;
  p.epsilon = p.gamma / (4 * pow(M, static_cast<std::uint64_t>(2 + p.k)));
  return p;
}

namespace {

// 1/(2 rho0 (alpha beta)^(j tau)), the size threshold of block j.
Rational block_threshold(const StrategyParams& params, const Rational& rho0, int j) {
  return 1 / (2 * rho0 * pow(params.shrink(), static_cast<std::uint64_t>(j) * params.tau_k));
}

}  // namespace

BlockSchedule block_schedule(const StrategyParams& params, const ResonanceSequence& lambda,
                             const Rational& rho0, int blocks) {
  if (blocks < 0) throw InvalidArgument("block_schedule: blocks must be >= 0");
  if (!(rho0 > 0)) throw InvalidArgument("block_schedule: rho0 must be positive");
  lambda.validate();
  if (lambda.M != params.M) throw InvalidArgument("block_schedule: Lambda built for a different M");
  if (!(rho0 * rho0 * Rational(lambda.t_sq(1)) < 1)) {
    throw ScheduleInfeasible("block_schedule: need rho0 < 1/t_1");
  }
  BlockSchedule s;
  s.rho0 = rho0;
  s.blocks = blocks;
  s.r.push_back(1);
  for (int j = 1; j < blocks; ++j) {
    const Rational x = block_threshold(params, rho0, j);
    const Rational x_sq = x * x;
    // Largest r with t_r < x; t_{r+1} >= x must exist.
    std::size_t r = 0;
    while (r < lambda.size() && Rational(lambda.t_sq(r + 1)) < x_sq) ++r;
    if (r == 0) throw ScheduleInfeasible("block_schedule: t_1 already exceeds block threshold");
    if (r == lambda.size()) {
      throw ScheduleInfeasible("block_schedule: Lambda too short for block " + std::to_string(j) +
                               " (needs t_r >= " + to_string(x) + ")");
    }
    const int q = static_cast<int>(r) - s.r.back();
    if (q >= params.k) {
      throw ScheduleInfeasible("block_schedule: q_" + std::to_string(j) + " = " + std::to_string(q) +
                               " >= k = " + std::to_string(params.k));
    }
    s.q.push_back(q);
    s.r.push_back(static_cast<int>(r));
  }
  if (!schedule_window_holds(params, lambda, s)) {
    throw ScheduleInfeasible("block_schedule: window inequality fails; Lambda violates [M, M^2]");
  }
  return s;
}

bool schedule_window_holds(const StrategyParams& params, const ResonanceSequence& lambda,
                           const BlockSchedule& schedule) {
  const Rational m2 = params.M * params.M;
  for (int j = 1; j < static_cast<int>(schedule.r.size()); ++j) {
    const Rational radius =
        schedule.rho0 * pow(params.shrink(), static_cast<std::uint64_t>(j) * params.tau_k);
    const Rational t_sq(lambda.t_sq(static_cast<std::size_t>(schedule.r[static_cast<std::size_t>(j)])));
    // 1/(2t) > radius  <=>  (2 radius)^2 t^2 < 1
    if (!(4 * radius * radius * t_sq < 1)) return false;
    // radius >= 1/(2 M^2 t)  <=>  (2 M^2 radius)^2 t^2 >= 1
    if (!(4 * m2 * m2 * radius * radius * t_sq >= 1)) return false;
  }
  return true;
}

std::vector<Hyperplane> dangerous_hyperplanes(const Ball& ball, const ResonanceSequence& lambda,
                                              int r_lo, int r_hi) {
  if (!(r_lo < r_hi) || r_lo < 0 || static_cast<std::size_t>(r_hi) > lambda.size()) {
    throw InvalidArgument("dangerous_hyperplanes: need 0 <= r_lo < r_hi <= |Lambda|");
  }
  std::vector<Hyperplane> planes;
  for (int r = r_lo + 1; r <= r_hi; ++r) {
    const IntVector& u = lambda.u(static_cast<std::size_t>(r));
    planes.push_back(Hyperplane{u, round_half_even(dot(u, ball.center))});
  }
  return planes;
}

std::vector<IndexedPlane> resonant_planes_near(const Ball& ball, const ResonanceSequence& lambda,
                                               int r_lo, int r_hi, const Rational& slack) {
  std::vector<IndexedPlane> planes;
  for (int r = r_lo + 1; r <= r_hi; ++r) {
    const IntVector& u = lambda.u(static_cast<std::size_t>(r));
    const Rational reach = ball.radius * sqrt_upper(lambda.t_sq(static_cast<std::size_t>(r))) + slack;
    const Rational image = dot(u, ball.center);
    for (Integer a = floor(image - reach); Rational(a) <= image + reach; ++a) {
      Hyperplane h{u, a};
      if (!min_residual_exceeds(ball, h, slack)) planes.push_back(IndexedPlane{r, std::move(h)});
    }
  }
  return planes;
}

}  // namespace schmidt
