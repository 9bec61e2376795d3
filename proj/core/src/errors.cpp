#include "schmidt/errors.hpp"

namespace schmidt {

IllegalMove::IllegalMove(Player player, std::size_t move_index, const std::string& detail)
    : Error(std::string("illegal move by ") + (player == Player::kWhite ? "White" : "Black") +
            " at move " + std::to_string(move_index) + ": " + detail),
      player_(player),
      move_index_(move_index) {}

CertificateFailed::CertificateFailed(int r, const std::string& detail)
    : Error("certificate failed at r=" + std::to_string(r) + ": " + detail), r_(r) {}

}  // namespace schmidt
