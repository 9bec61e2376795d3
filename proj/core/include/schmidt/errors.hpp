#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace schmidt {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Parameter or input out of its documented range.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

enum class Player { kWhite, kBlack };

class IllegalMove : public Error {
 public:
  IllegalMove(Player player, std::size_t move_index, const std::string& detail);

  Player player() const { return player_; }
  std::size_t move_index() const { return move_index_; }

 private:
  Player player_;
  std::size_t move_index_;
};

class ScheduleInfeasible : public Error {
 public:
  using Error::Error;
};

// Raised when an escape or avoidance postcondition fails at runtime. The
// message carries the offending geometry; `trace_json` is filled in by the
// game engine when the failure surfaces during a game.
class EscapeAssertionFailed : public Error {
 public:
  using Error::Error;
  std::string trace_json;
};

class SelectionExhausted : public Error {
 public:
  using Error::Error;
};

class CertificateFailed : public Error {
 public:
  CertificateFailed(int r, const std::string& detail);
  int r() const { return r_; }

 private:
  int r_;
};

class EmptySequence : public Error {
 public:
  using Error::Error;
};

class TableRangeExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace schmidt
