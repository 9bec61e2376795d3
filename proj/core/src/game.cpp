#include "schmidt/game.hpp"

#include "schmidt/serialization.hpp"

namespace schmidt {

void GameParams::validate() const {
  if (!(alpha > 0 && alpha < Rational(1, 2))) {
    throw InvalidArgument("alpha must lie in (0, 1/2), got " + to_string(alpha));
  }
  if (!(beta > 0 && beta < 1)) {
    throw InvalidArgument("beta must lie in (0, 1), got " + to_string(beta));
  }
  if (dimension < 1) throw InvalidArgument("dimension must be >= 1");
}

const char* player_code(Player p) { return p == Player::kWhite ? "W" : "B"; }

bool legal_reply(const GameState& state, const Point& center) {
  if (center.size() != state.current.dimension()) return false;
  return ball_contains(state.current, Ball{center, state.factor() * state.current.radius});
}

GameTrace run_game(const GameParams& params, const Ball& initial, PlayerPolicy& white,
                   PlayerPolicy& black, int rounds) {
  params.validate();
  if (rounds < 1) throw InvalidArgument("run_game: rounds must be >= 1");
  if (!(initial.radius > 0)) throw InvalidArgument("run_game: initial radius must be positive");
  if (initial.dimension() != static_cast<std::size_t>(params.dimension)) {
    throw DimensionMismatch("run_game: initial ball dimension does not match params");
  }

  GameTrace trace{params, initial, {}};
  trace.moves.reserve(2 * static_cast<std::size_t>(rounds));
  GameState state{params, initial, Player::kWhite, 0};
  try {
    for (int round = 0; round < rounds; ++round) {
      for (Player mover : {Player::kWhite, Player::kBlack}) {
        state.turn = mover;
        PlayerPolicy& policy = mover == Player::kWhite ? white : black;
        Proposal proposal = policy.propose(state);
        if (!legal_reply(state, proposal.center)) {
          throw IllegalMove(mover, state.move_index,
                            "proposed ball does not fit inside the current ball");
        }
        Ball next{std::move(proposal.center), state.factor() * state.current.radius};
        trace.moves.push_back(Move{mover, next, std::move(proposal.note)});
        state.current = std::move(next);
        ++state.move_index;
      }
    }
  } catch (EscapeAssertionFailed& e) {
    if (e.trace_json.empty()) e.trace_json = to_json(trace).dump();
    throw;
  }
  return trace;
}

Ball limit_enclosure(const GameTrace& trace) { return trace.final_ball(); }

std::string check_trace(const GameTrace& trace) {
  const Ball* previous = &trace.initial;
  for (std::size_t i = 0; i < trace.moves.size(); ++i) {
    const Move& move = trace.moves[i];
    const Player expected = i % 2 == 0 ? Player::kWhite : Player::kBlack;
    if (move.player != expected) return "move " + std::to_string(i) + ": wrong player";
    const Rational& f = expected == Player::kWhite ? trace.params.alpha : trace.params.beta;
    if (move.ball.radius != f * previous->radius) {
      return "move " + std::to_string(i) + ": radius law violated";
    }
    if (!ball_contains(*previous, move.ball)) {
      return "move " + std::to_string(i) + ": ball not nested in its predecessor";
    }
    previous = &move.ball;
  }
  return {};
}

}  // namespace schmidt
