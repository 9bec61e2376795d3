#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "schmidt/game.hpp"
#include "schmidt/schedule.hpp"

namespace schmidt {

// A point of the sphere bounding `ball`, on the far side of the plane
// through the center parallel to the hyperplane.
struct EscortPoint {
  std::size_t hyperplane_index = 0;
  Point xi;
  Point direction;  // exact unit vector, xi = center + radius * direction
};

// If the plane passes through the center, the direction of the
// lexicographically positive multiple of its normal is used.
EscortPoint escort_point(const Hyperplane& h, const Ball& ball, const Rational& tol,
                         std::size_t index = 0);

struct CapOptions {
  std::size_t sample_budget = 32;
  std::size_t max_budget = 1 << 13;
  std::uint64_t seed = 0;
  Rational tol = default_direction_tolerance();
  // Residual margin each plane must clear over the cap segment; empty means 0.
  std::vector<Rational> margins;
};

struct CapSelection {
  Point direction;
  std::vector<std::size_t> escaped;
  std::size_t count = 0;
  std::size_t required = 0;
  std::size_t candidates = 0;
};

// ceil(omega_lb * k).
std::size_t required_escapes(const Rational& omega_lb, std::size_t k);

// Plane i is escaped by direction x when it clears margins[i] over the cap
// segment {z in ball : x.(z - center) >= gamma*radius/2}.
bool cap_escapes(const Ball& ball, const Point& direction, const Rational& gamma,
                 const Hyperplane& h, const Rational& margin = Rational(0));

// Finds an exact unit direction escaping at least ceil(omega_lb * k) of the k
// planes. Candidates: escort directions, then a deterministic low-discrepancy
// set and seeded random directions with a doubling budget. Among candidates
// with the best count the lexicographically smallest direction wins.
// Throws SelectionExhausted past options.max_budget.
CapSelection select_cap(const Ball& ball, std::span<const Hyperplane> planes,
                        const StrategyParams& params, const CapOptions& options = {});

// {y : direction.(y - start.center) >= gamma * start.radius / 2}.
Halfspace escape_target(const Ball& start, const Point& direction, const Rational& gamma);

// White pushes its center by (1 - alpha) rho_B along the target direction on
// each of `rounds` turns, then recenters concentrically.
class EscapePolicy : public PlayerPolicy {
 public:
  EscapePolicy(Halfspace target, int rounds, std::string note = "escape");

  Proposal propose(const GameState& state) override;

  // Throws EscapeAssertionFailed unless `ball` lies inside the target.
  void verify(const Ball& ball) const;

  const Halfspace& target() const { return target_; }
  int rounds() const { return rounds_; }
  int played() const { return played_; }

 private:
  Halfspace target_;
  int rounds_;
  int played_ = 0;
  std::string note_;
};

// Requires (alpha beta)^t_escape < gamma/2, checked on the first move.
std::unique_ptr<EscapePolicy> escape_policy(Halfspace target, int t_escape);

struct AvoidOptions {
  // Extra residual every plane must clear at the end, on top of the
  // rho_final * gamma / 2 distance.
  Rational residual_floor{0};
  CapOptions cap;
  std::string label = "avoid";
};

struct SubBlockRecord {
  int subblock = 0;
  std::vector<std::size_t> threatening;
  std::optional<CapSelection> cap;
};

// Plays tau_k rounds of escapes: each sub-block of t_escape rounds selects a
// cap over the planes still threatening the ball and escapes into it. After
// the tau_k rounds every point of the ball is at distance
// > rho_final * gamma / 2 from every plane (and at residual > residual_floor).
class AvoidPolicy : public PlayerPolicy {
 public:
  AvoidPolicy(std::vector<Hyperplane> planes, StrategyParams params, AvoidOptions options = {});

  Proposal propose(const GameState& state) override;

  // Indices of planes not yet cleared with the final margin over `ball`.
  // Only meaningful once the policy has seen its first ball.
  std::vector<std::size_t> threatening(const Ball& ball) const;

  // Checks the last escape and the final postcondition on the ball reached
  // after tau_k rounds. Throws EscapeAssertionFailed.
  void finish(const Ball& final_ball);

  int rounds() const { return params_.tau_k; }
  const std::vector<SubBlockRecord>& history() const { return history_; }
  const std::vector<Hyperplane>& planes() const { return planes_; }

 private:
  void start(const Ball& ball);

  std::vector<Hyperplane> planes_;
  StrategyParams params_;
  AvoidOptions options_;
  bool started_ = false;
  Rational final_radius_;
  std::vector<Rational> cap_margins_;
  int played_ = 0;
  std::optional<EscapePolicy> escape_;
  std::vector<SubBlockRecord> history_;
};

std::unique_ptr<AvoidPolicy> avoid_hyperplanes(std::vector<Hyperplane> planes,
                                               const StrategyParams& params,
                                               AvoidOptions options = {});

// Every point of `ball` lies at distance > ball.radius * gamma / 2 from every plane.
bool avoidance_postcondition(const Ball& ball, std::span<const Hyperplane> planes,
                             const Rational& gamma);

}  // namespace schmidt
