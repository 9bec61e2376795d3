#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "schmidt/errors.hpp"
#include "schmidt/geometry.hpp"

namespace schmidt {

// Schmidt's (alpha, beta)-game in R^n. Black opens with a ball; White replies
// with a ball of radius alpha*rho inside it, Black with beta*rho inside
// White's, and so on.
struct GameParams {
  Rational alpha;
  Rational beta;
  int dimension = 1;

  // 1 + alpha*beta - 2*alpha.
  Rational gamma() const { return 1 + alpha * beta - 2 * alpha; }
  // Throws InvalidArgument unless alpha in (0,1/2), beta in (0,1), dimension >= 1.
  void validate() const;
};

struct GameState {
  GameParams params;
  Ball current;
  Player turn = Player::kWhite;
  std::size_t move_index = 0;

  // Radius factor the mover must apply: alpha for White, beta for Black.
  const Rational& factor() const { return turn == Player::kWhite ? params.alpha : params.beta; }
};

struct Proposal {
  Point center;
  std::string note;
};

// A player only chooses centers; radii are forced by the engine.
class PlayerPolicy {
 public:
  virtual ~PlayerPolicy() = default;
  virtual Proposal propose(const GameState& state) = 0;
};

struct Move {
  Player player;
  Ball ball;
  std::string note;

  friend bool operator==(const Move&, const Move&) = default;
};

struct GameTrace {
  GameParams params;
  Ball initial;
  std::vector<Move> moves;

  const Ball& final_ball() const { return moves.empty() ? initial : moves.back().ball; }
};

// True iff Ball(center, f*rho) fits in the current ball, f = alpha or beta.
bool legal_reply(const GameState& state, const Point& center);

// Plays `rounds` full rounds (White then Black). Throws IllegalMove on the
// first illegal proposal; nothing is clamped or repaired.
GameTrace run_game(const GameParams& params, const Ball& initial, PlayerPolicy& white,
                   PlayerPolicy& black, int rounds);

// The last ball of the trace; its center is the reported limit point.
Ball limit_enclosure(const GameTrace& trace);

// Checks the radius law and nesting of a finished trace. Returns an empty
// string when the trace is consistent, else a description of the first
// violation.
std::string check_trace(const GameTrace& trace);

const char* player_code(Player p);

}  // namespace schmidt
