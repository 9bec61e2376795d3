#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "schmidt/escape.hpp"
#include "schmidt/game.hpp"
#include "schmidt/resonance.hpp"
#include "schmidt/schedule.hpp"

namespace schmidt {

// How to reconcile Black's opening ball with rho0 < 1/t_1.
enum class OpeningMode {
  kDriver,       // the driver shrinks the opening ball by halving its radius
  kAdversarial,  // White waits with concentric moves until the radius is small enough
};

struct StrategyConfig {
  Rational alpha;
  Rational beta;
  Rational M{3};
  int blocks = 1;
  std::optional<int> k_override;
  OpeningMode opening = OpeningMode::kDriver;
  CapOptions cap;
};

struct OpeningPlan {
  Ball initial;          // the ball the game starts from
  int wait_rounds = 0;   // concentric White rounds before block 0
  int halvings = 0;      // radius halvings applied in driver mode
  Rational rho_start;    // radius when block 0 starts
  std::vector<std::string> notes;
};

OpeningPlan plan_opening(const Ball& opening, const ResonanceSequence& lambda,
                         const StrategyParams& params, OpeningMode mode);

struct HandledPlane {
  int r = 0;
  IntVector u;
  Integer a;
};

struct StrategyState {
  StrategyParams params;
  ResonanceSequence lambda;
  BlockSchedule schedule;
  OpeningPlan opening;
  int current_block = -1;
  std::vector<HandledPlane> handled;
  // Per block: distinct resonance indices handled, and candidate planes fed
  // to the avoidance policy (a resonance can meet two integers).
  std::vector<int> dangerous_counts;
  std::vector<int> plane_counts;

  // Last resonance index covered once every block has run; 0 when blocks == 0.
  int certified_up_to() const;
  int white_moves() const { return opening.wait_rounds + schedule.blocks * params.tau_k; }
};

// Plays the opening wait, then `blocks` blocks of tau_k rounds. Block j
// avoids every plane (u^(r), a) with r in (r_j, r_{j+1}] that could come
// within the final margin, with a residual floor of epsilon, and the
// inductive invariant ||u^(r).p|| > epsilon over the whole ball is
// re-checked at each block boundary.
class WhiteStrategy : public PlayerPolicy {
 public:
  WhiteStrategy(StrategyState state, CapOptions cap);

  Proposal propose(const GameState& state) override;

  // Closes the last block against the final ball; throws
  // EscapeAssertionFailed or CertificateFailed.
  void finish(const Ball& final_ball);

  const StrategyState& state() const { return state_; }
  // Rounds the game must run for the strategy to complete.
  int rounds() const { return state_.white_moves(); }

 private:
  void close_block(const Ball& ball);
  void open_block(int block, const Ball& ball);
  void check_invariant(const Ball& ball, int after_block) const;

  StrategyState state_;
  CapOptions cap_;
  int played_ = 0;
  bool finished_ = false;
  std::unique_ptr<AvoidPolicy> avoid_;
};

// Derives params, plans the opening and the block schedule.
std::unique_ptr<WhiteStrategy> build_strategy(const ResonanceSequence& lambda, const Ball& opening,
                                              const StrategyConfig& config);
// Generates Lambda from theta first: best approximations up to t_max,
// normalized into the [M, M^2] window.
std::unique_ptr<WhiteStrategy> build_strategy(const ThetaMatrix& theta, std::int64_t t_max,
                                              const Ball& opening, const StrategyConfig& config);

struct CertifiedPlane {
  int r = 0;
  IntVector u;
  Integer a;
  Rational residual_lb;  // rational lower bound on min over the enclosure of |u.p - a|
};

struct Certificate {
  Ball enclosure;
  Rational epsilon;
  std::vector<CertifiedPlane> handled;
  std::optional<StrategyParams> params;
};

// Every p in `ball` has ||u^(r).p|| > epsilon for r = 1..r_max. Shares no
// code with the strategy beyond exact arithmetic. Throws CertificateFailed.
Certificate certify_enclosure(const ResonanceSequence& lambda, int r_max, const Rational& epsilon,
                              const Ball& ball);

// Certifies the final ball of a finished game for every resonance the
// schedule covers. Throws CertificateFailed.
Certificate certificate(const StrategyState& state, const GameTrace& trace);

}  // namespace schmidt
