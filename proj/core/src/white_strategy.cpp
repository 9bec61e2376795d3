#include "schmidt/white_strategy.hpp"


#include "schmidt/errors.hpp"

namespace schmidt {

OpeningPlan plan_opening(const Ball& opening, const ResonanceSequence& lambda,
                         const StrategyParams& params, OpeningMode mode) {
  if (!(opening.radius > 0)) throw InvalidArgument("opening ball needs a positive radius");
  if (lambda.size() == 0) throw InvalidArgument("empty resonance sequence");
  const Rational t1_sq(lambda.t_sq(1));
  OpeningPlan plan;
  plan.initial = opening;
  Rational rho = opening.radius;
  if (mode == OpeningMode::kDriver) {
    while (!(rho * rho * t1_sq < 1)) {
      rho /= 2;
      ++plan.halvings;
    }
    plan.initial.radius = rho;
    if (plan.halvings > 0) {
      plan.notes.push_back("opening radius halved " + std::to_string(plan.halvings) +
                           " times to satisfy rho0 < 1/t_1");
    }
  } else {
    const Rational ab = params.shrink();
    while (!(rho * rho * t1_sq < 1)) {
      rho *= ab;
      ++plan.wait_rounds;
    }
    if (plan.wait_rounds > 0) {
      plan.notes.push_back("White waits " + std::to_string(plan.wait_rounds) +
                           " concentric rounds until rho < 1/t_1");
    }
  }
  plan.rho_start = rho;
  return plan;
}

int StrategyState::certified_up_to() const {
  return schedule.blocks == 0 ? 0 : schedule.last_handled(schedule.blocks - 1);
}

WhiteStrategy::WhiteStrategy(StrategyState state, CapOptions cap)
    : state_(std::move(state)), cap_(std::move(cap)) {}

void WhiteStrategy::check_invariant(const Ball& ball, int after_block) const {
  const Rational& eps = state_.params.epsilon;
  for (const auto& h : state_.handled) {
    const Rational d = nearest_int_dist(dot(h.u, ball.center));
    // ||u.p|| >= ||u.c|| - rho t_r over the ball.
    if (compare_with_sqrt(d - eps, ball.radius, Rational(norm_sq(h.u))) <= 0) {
      throw CertificateFailed(h.r, "inductive invariant broken after block " + std::to_string(after_block));
    }
  }
}

void WhiteStrategy::close_block(const Ball& ball) {
  const int j = state_.current_block;
  if (j < 0) return;
  avoid_->finish(ball);
  avoid_.reset();
  const int lo = state_.schedule.first_handled(j);
  const int hi = state_.schedule.last_handled(j);
  for (int r = lo; r <= hi; ++r) {
    const IntVector& u = state_.lambda.u(static_cast<std::size_t>(r));
    state_.handled.push_back(HandledPlane{r, u, round_half_even(dot(u, ball.center))});
  }
  check_invariant(ball, j);
}

void WhiteStrategy::open_block(int block, const Ball& ball) {
  state_.current_block = block;
  const StrategyParams& p = state_.params;
  const int lo = state_.schedule.first_handled(block);
  const int hi = state_.schedule.last_handled(block);
  const int distinct = hi >= lo ? hi - lo + 1 : 0;
  if (distinct >= p.k) {
    throw ScheduleInfeasible("block " + std::to_string(block) + " has " + std::to_string(distinct) +
                             " dangerous resonances, need < k = " + std::to_string(p.k));
  }
  const Rational final_radius = ball.radius * pow(p.shrink(), static_cast<std::uint64_t>(p.tau_k));
  std::vector<Hyperplane> planes;
  for (int r = lo; r <= hi; ++r) {
    Rational slack = final_radius * p.gamma / 2 * sqrt_upper(state_.lambda.t_sq(static_cast<std::size_t>(r)));
    if (slack < p.epsilon) slack = p.epsilon;
    for (auto& ip : resonant_planes_near(ball, state_.lambda, r - 1, r, slack)) planes.push_back(std::move(ip.plane));
  }
  state_.dangerous_counts.push_back(distinct);
  state_.plane_counts.push_back(static_cast<int>(planes.size()));
  AvoidOptions options;
  options.residual_floor = p.epsilon;
  options.cap = cap_;
  options.cap.seed = cap_.seed + static_cast<std::uint64_t>(block) * 1000003u;
  options.label = "block " + std::to_string(block);
  avoid_ = avoid_hyperplanes(std::move(planes), p, std::move(options));
}

Proposal WhiteStrategy::propose(const GameState& game) {
  if (game.turn != Player::kWhite) throw InvalidArgument("white strategy plays White");
  const int wait = state_.opening.wait_rounds;
  const int tau = state_.params.tau_k;
  const int index = played_++;
  if (index < wait) return Proposal{game.current.center, "opening wait"};
  const int offset = index - wait;
  const int block = offset / tau;
  if (block >= state_.schedule.blocks) return Proposal{game.current.center, "strategy complete"};
  if (offset % tau == 0) {
    close_block(game.current);
    open_block(block, game.current);
  }
  return avoid_->propose(game);
}

void WhiteStrategy::finish(const Ball& final_ball) {
  if (finished_) return;
  if (played_ < rounds()) {
    throw InvalidArgument("white strategy finished after " + std::to_string(played_) + " of " +
                          std::to_string(rounds()) + " moves");
  }
  close_block(final_ball);
  state_.current_block = state_.schedule.blocks;
  finished_ = true;
}

std::unique_ptr<WhiteStrategy> build_strategy(const ResonanceSequence& lambda, const Ball& opening,
                                              const StrategyConfig& config) {
  lambda.validate();
  const int n = static_cast<int>(opening.dimension());
  if (lambda.dimension() != opening.dimension()) {
    throw DimensionMismatch("resonance vectors and opening ball differ in dimension");
  }
  GameParams{config.alpha, config.beta, n}.validate();
  if (config.blocks < 0) throw InvalidArgument("blocks must be >= 0");
  StrategyState state;
  state.params = derive_params(config.alpha, config.beta, config.M, n, config.k_override);
  state.lambda = lambda;
  state.opening = plan_opening(opening, lambda, state.params, config.opening);
  state.schedule = block_schedule(state.params, lambda, state.opening.rho_start, config.blocks);
  return std::make_unique<WhiteStrategy>(std::move(state), config.cap);
}

std::unique_ptr<WhiteStrategy> build_strategy(const ThetaMatrix& theta, std::int64_t t_max,
                                              const Ball& opening, const StrategyConfig& config) {
  auto records = best_approximations(theta, t_max);
  return build_strategy(lacunary_normalize(records, config.M), opening, config);
}

Certificate certify_enclosure(const ResonanceSequence& lambda, int r_max, const Rational& epsilon,
                              const Ball& ball) {
  if (r_max < 0 || static_cast<std::size_t>(r_max) > lambda.size()) {
    throw InvalidArgument("certify_enclosure: r_max outside Lambda");
  }
  Certificate cert;
  cert.enclosure = ball;
  cert.epsilon = epsilon;
  for (int r = 1; r <= r_max; ++r) {
    const IntVector& u = lambda.u(static_cast<std::size_t>(r));
    const Integer& t_sq = lambda.t_sq(static_cast<std::size_t>(r));
    const Rational image = dot(u, ball.center);
    const Integer a = round_half_even(image);
    const Rational d = abs(image - Rational(a));
    // min over p, a' of |u.p - a'| >= ||u.c|| - rho t_r > epsilon, on squares.
    if (compare_with_sqrt(d - epsilon, ball.radius, Rational(t_sq)) <= 0) {
      throw CertificateFailed(r, "||u.c|| - rho t_r = " + to_string(d) + " - " + to_string(ball.radius) +
                                     " * sqrt(" + t_sq.str() + ") is not > epsilon = " + to_string(epsilon));
    }
    cert.handled.push_back(CertifiedPlane{r, u, a, d - ball.radius * sqrt_upper(t_sq)});
  }
  return cert;
}

Certificate certificate(const StrategyState& state, const GameTrace& trace) {
  const std::string problem = check_trace(trace);
  if (!problem.empty()) throw CertificateFailed(0, "trace is not a legal game: " + problem);
  const std::size_t needed = 2 * static_cast<std::size_t>(state.white_moves());
  if (trace.moves.size() < needed) {
    throw CertificateFailed(0, "trace has " + std::to_string(trace.moves.size()) + " moves, strategy needs " +
                                   std::to_string(needed));
  }
  Certificate cert = certify_enclosure(state.lambda, state.certified_up_to(), state.params.epsilon,
                                       limit_enclosure(trace));
  cert.params = state.params;
  return cert;
}

}  // namespace schmidt
