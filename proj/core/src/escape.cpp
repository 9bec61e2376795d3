#include "schmidt/escape.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "schmidt/errors.hpp"

namespace schmidt {

namespace {

// Sampled candidates only need to be exact unit vectors, not accurate ones;
// a coarse tolerance keeps their denominators small.
Rational sample_tolerance() { return Rational(1, 1 << 12); }

constexpr std::array<unsigned, 16> kPrimes = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};

double radical_inverse(std::uint64_t i, unsigned base) {
  double inv = 1.0 / base, f = inv, r = 0;
  while (i > 0) {
    r += f * static_cast<double>(i % base);
    i /= base;
    f *= inv;
  }
  return r;
}

// Halton point i mapped to a direction through Box-Muller pairs.
std::vector<double> halton_direction(std::uint64_t i, int n) {
  std::vector<double> g(static_cast<std::size_t>(n));
  for (int d = 0; d < n; d += 2) {
    const double u1 = std::max(radical_inverse(i, kPrimes[static_cast<std::size_t>(d) % kPrimes.size()]), 1e-12);
    const double u2 = radical_inverse(i, kPrimes[static_cast<std::size_t>(d + 1) % kPrimes.size()]);
    const double rad = std::sqrt(-2 * std::log(u1));
    g[static_cast<std::size_t>(d)] = rad * std::cos(2 * std::numbers::pi * u2);
    if (d + 1 < n) g[static_cast<std::size_t>(d + 1)] = rad * std::sin(2 * std::numbers::pi * u2);
  }
  return g;
}

std::optional<Point> rationalize(const std::vector<double>& v, const Rational& tol) {
  Point p;
  bool nonzero = false;
  for (double x : v) {
    if (!std::isfinite(x)) return std::nullopt;
    nonzero = nonzero || x != 0;
    p.push_back(from_double(x));
  }
  if (!nonzero) return std::nullopt;
  return rational_unit_direction(p, tol);
}

std::vector<double> to_doubles(const Point& p) {
  std::vector<double> v;
  for (const auto& x : p) v.push_back(static_cast<double>(to_long_double(x)));
  return v;
}

std::string format_direction(const Point& d) {
  std::ostringstream os;
  os.precision(6);
  os << "[";
  for (std::size_t i = 0; i < d.size(); ++i) os << (i ? ", " : "") << static_cast<double>(to_long_double(d[i]));
  os << "]";
  return os.str();
}

std::string format_indices(const std::vector<std::size_t>& idx) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < idx.size(); ++i) os << (i ? "," : "") << idx[i];
  os << "}";
  return os.str();
}

}  // namespace

EscortPoint escort_point(const Hyperplane& h, const Ball& ball, const Rational& tol,
                         std::size_t index) {
  if (!(ball.radius > 0)) throw InvalidArgument("escort_point: radius must be positive");
  const Rational excess = dot(h.normal, ball.center) - Rational(h.offset);
  int s = sign(excess);
  if (s == 0) s = lex_positive(h.normal) ? 1 : -1;
  Point d = rational_unit_direction(h.normal, tol);
  if (s < 0) d = Rational(-1) * d;
  return EscortPoint{index, ball.center + ball.radius * d, d};
}

std::size_t required_escapes(const Rational& omega_lb, std::size_t k) {
  return ceil(omega_lb * Rational(static_cast<long long>(k))).convert_to<std::size_t>();
}

bool cap_escapes(const Ball& ball, const Point& direction, const Rational& gamma,
                 const Hyperplane& h, const Rational& margin) {
  return segment_residual_exceeds(ball, direction, gamma, h, margin);
}

CapSelection select_cap(const Ball& ball, std::span<const Hyperplane> planes,
                        const StrategyParams& params, const CapOptions& options) {
  if (planes.empty()) throw InvalidArgument("select_cap: need at least one plane");
  if (!options.margins.empty() && options.margins.size() != planes.size()) {
    throw InvalidArgument("select_cap: one margin per plane expected");
  }
  const int n = static_cast<int>(ball.dimension());
  const std::size_t k = planes.size();
  const Rational zero(0);

  CapSelection best;
  best.required = required_escapes(params.omega_lb, k);
  bool have_best = false;

  auto consider = [&](const Point& d) {
    ++best.candidates;
    std::vector<std::size_t> escaped;
    for (std::size_t i = 0; i < k; ++i) {
      const Rational& margin = options.margins.empty() ? zero : options.margins[i];
      if (cap_escapes(ball, d, params.gamma, planes[i], margin)) escaped.push_back(i);
    }
    if (!have_best || escaped.size() > best.count ||
        (escaped.size() == best.count && lex_less(d, best.direction))) {
      have_best = true;
      best.direction = d;
      best.count = escaped.size();
      best.escaped = std::move(escaped);
    }
  };

  // Escort directions and, in the plane, their rotations to the edge of the
  // window of width arcsin(gamma/2); in R^1 the two directions are exhaustive.
  std::vector<Point> escorts;
  for (std::size_t i = 0; i < k; ++i) escorts.push_back(escort_point(planes[i], ball, options.tol, i).direction);
  for (const auto& d : escorts) consider(d);
  if (n == 1) {
    consider(Point{Rational(1)});
    consider(Point{Rational(-1)});
  } else {
    const double half_window = 0.98 * std::asin(static_cast<double>(to_long_double(params.gamma)) / 2);
    for (const auto& e : escorts) {
      auto v = to_doubles(e);
      if (n == 2) {
        for (double angle : {half_window, -half_window}) {
          std::vector<double> rot = {v[0] * std::cos(angle) - v[1] * std::sin(angle),
                                     v[0] * std::sin(angle) + v[1] * std::cos(angle)};
          if (auto d = rationalize(rot, sample_tolerance())) consider(*d);
        }
      }
    }
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < escorts.size() && pairs < options.sample_budget; ++i) {
      for (std::size_t j = i + 1; j < escorts.size() && pairs < options.sample_budget; ++j, ++pairs) {
        auto a = to_doubles(escorts[i]);
        auto b = to_doubles(escorts[j]);
        for (std::size_t c = 0; c < a.size(); ++c) a[c] += b[c];
        if (auto d = rationalize(a, sample_tolerance())) consider(*d);
      }
    }
  }
  if (best.count >= best.required) return best;

  std::mt19937_64 rng(options.seed);
  std::normal_distribution<double> gauss;
  std::uint64_t halton_index = 1;
  for (std::size_t budget = std::max<std::size_t>(options.sample_budget, 1);
       budget <= options.max_budget; budget *= 2) {
    for (std::size_t i = 0; i < budget; ++i) {
      if (n == 1) break;
      if (auto d = rationalize(halton_direction(halton_index++, n), sample_tolerance())) consider(*d);
      std::vector<double> g(static_cast<std::size_t>(n));
      for (auto& x : g) x = gauss(rng);
      if (auto d = rationalize(g, sample_tolerance())) consider(*d);
    }
    if (best.count >= best.required) return best;
  }
  throw SelectionExhausted("select_cap: best direction escapes " + std::to_string(best.count) +
                           " of " + std::to_string(k) + " planes, need " +
                           std::to_string(best.required));
}

Halfspace escape_target(const Ball& start, const Point& direction, const Rational& gamma) {
  if (norm_sq(direction) != 1) throw InvalidArgument("escape_target: direction must be an exact unit vector");
  return Halfspace{direction, gamma * start.radius / 2, start.center};
}

EscapePolicy::EscapePolicy(Halfspace target, int rounds, std::string note)
    : target_(std::move(target)), rounds_(rounds), note_(std::move(note)) {
  if (rounds_ < 1) throw InvalidArgument("escape policy needs at least one round");
  if (norm_sq(target_.direction) != 1) throw InvalidArgument("escape direction must be an exact unit vector");
}

Proposal EscapePolicy::propose(const GameState& state) {
  if (state.turn != Player::kWhite) throw InvalidArgument("escape policy plays White");
  if (played_ == 0) {
    const Rational ab = state.params.alpha * state.params.beta;
    if (!(pow(ab, static_cast<std::uint64_t>(rounds_)) < state.params.gamma() / 2)) {
      throw InvalidArgument("escape policy: (alpha beta)^t must be < gamma/2");
    }
  }
  if (played_ >= rounds_) return Proposal{state.current.center, note_ + " (done)"};
  ++played_;
  const Rational step = (1 - state.params.alpha) * state.current.radius;
  return Proposal{state.current.center + step * target_.direction,
                  note_ + " round " + std::to_string(played_) + "/" + std::to_string(rounds_)};
}

void EscapePolicy::verify(const Ball& ball) const {
  if (!halfspace_contains_ball(target_, ball)) {
    throw EscapeAssertionFailed("escape postcondition failed: ball of radius " +
                                to_string(ball.radius) + " not inside the target half-space " +
                                format_direction(target_.direction) + " at threshold " +
                                to_string(target_.threshold));
  }
}

std::unique_ptr<EscapePolicy> escape_policy(Halfspace target, int t_escape) {
  return std::make_unique<EscapePolicy>(std::move(target), t_escape);
}

AvoidPolicy::AvoidPolicy(std::vector<Hyperplane> planes, StrategyParams params, AvoidOptions options)
    : planes_(std::move(planes)), params_(std::move(params)), options_(std::move(options)) {
  if (params_.tau_k < 1) throw InvalidArgument("avoid policy needs tau_k >= 1");
}

void AvoidPolicy::start(const Ball& ball) {
  started_ = true;
  final_radius_ = ball.radius * pow(params_.shrink(), static_cast<std::uint64_t>(params_.tau_k));
  const Rational distance = final_radius_ * params_.gamma / 2;
  cap_margins_.clear();
  for (const auto& h : planes_) {
    Rational m = distance * sqrt_upper(h.norm_sq());
    cap_margins_.push_back(m > options_.residual_floor ? m : options_.residual_floor);
  }
}

std::vector<std::size_t> AvoidPolicy::threatening(const Ball& ball) const {
  const Rational distance = final_radius_ * params_.gamma / 2;
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < planes_.size(); ++i) {
    const bool clear = distance_exceeds(ball, planes_[i], distance) &&
                       min_residual_exceeds(ball, planes_[i], options_.residual_floor);
    if (!clear) out.push_back(i);
  }
  return out;
}

Proposal AvoidPolicy::propose(const GameState& state) {
  if (state.turn != Player::kWhite) throw InvalidArgument("avoid policy plays White");
  if (!started_) start(state.current);
  if (played_ >= params_.tau_k) return Proposal{state.current.center, options_.label + " done"};

  const int t = params_.t_escape;
  const int subblock = played_ / t;
  if (played_ % t == 0) {
    if (escape_) escape_->verify(state.current);
    escape_.reset();
    SubBlockRecord record;
    record.subblock = subblock;
    record.threatening = threatening(state.current);
    if (!record.threatening.empty()) {
      std::vector<Hyperplane> active;
      CapOptions cap = options_.cap;
      cap.seed = options_.cap.seed + static_cast<std::uint64_t>(subblock);
      cap.margins.clear();
      for (auto i : record.threatening) {
        active.push_back(planes_[i]);
        cap.margins.push_back(cap_margins_[i]);
      }
      CapSelection sel = select_cap(state.current, active, params_, cap);
      for (auto& e : sel.escaped) e = record.threatening[e];
      std::string note = options_.label + ", sub-block " + std::to_string(subblock) + ", cap " +
                         format_direction(sel.direction) + ", escapes " + format_indices(sel.escaped) +
                         " of " + format_indices(record.threatening);
      escape_.emplace(escape_target(state.current, sel.direction, params_.gamma), t, std::move(note));
      record.cap = std::move(sel);
    }
    history_.push_back(std::move(record));
  }
  ++played_;
  if (!escape_) {
    return Proposal{state.current.center,
                    options_.label + ", sub-block " + std::to_string(subblock) + ", idle"};
  }
  return escape_->propose(state);
}

void AvoidPolicy::finish(const Ball& final_ball) {
  if (!started_) start(final_ball);
  if (escape_) {
    escape_->verify(final_ball);
    escape_.reset();
  }
  auto left = threatening(final_ball);
  if (!left.empty()) {
    throw EscapeAssertionFailed(options_.label + ": planes " + format_indices(left) +
                                " still within the final margin after tau_k rounds");
  }
}

std::unique_ptr<AvoidPolicy> avoid_hyperplanes(std::vector<Hyperplane> planes,
                                               const StrategyParams& params, AvoidOptions options) {
  return std::make_unique<AvoidPolicy>(std::move(planes), params, std::move(options));
}

bool avoidance_postcondition(const Ball& ball, std::span<const Hyperplane> planes,
                             const Rational& gamma) {
  const Rational distance = ball.radius * gamma / 2;
  return std::all_of(planes.begin(), planes.end(),
                     [&](const Hyperplane& h) { return distance_exceeds(ball, h, distance); });
}

}  // namespace schmidt
