#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "schmidt/game.hpp"
#include "schmidt/resonance.hpp"

namespace schmidt {

// Replies with the same center; usable by either player.
std::unique_ptr<PlayerPolicy> concentric_policy(std::string note = {});

// Uniform legal center on a dyadic grid of 2^grid_bits steps per radius,
// by rejection sampling. Usable by either player; deterministic per seed.
std::unique_ptr<PlayerPolicy> random_black(std::uint64_t seed, unsigned grid_bits = 12);

// Pulls toward the nearest resonance plane (u^(r), round(u^(r).c)) over all
// r of Lambda, by the maximal legal step (1 - beta) rho_W, landing on the
// plane when it is closer than that. If `reach` is set and the nearest plane
// is farther than reach * rho_W, replies concentrically.
std::unique_ptr<PlayerPolicy> greedy_black(const ResonanceSequence& lambda,
                                           std::optional<Rational> reach = std::nullopt);
// Same, against an explicit list of planes.
std::unique_ptr<PlayerPolicy> greedy_black(std::vector<Hyperplane> planes,
                                           std::optional<Rational> reach = std::nullopt);

// Moves by the maximal legal step along -direction (exact unit vector): the
// worst case for a White player pushing along `direction`.
std::unique_ptr<PlayerPolicy> pullback_black(Point direction);

// Plays the listed centers, then replies concentrically.
std::unique_ptr<PlayerPolicy> scripted_black(std::vector<Point> centers);
// Replays proposals including their notes; used to replay recorded traces.
std::unique_ptr<PlayerPolicy> scripted_policy(std::vector<Proposal> proposals);

// Builds one of "random", "greedy", "pullback", "concentric" by name.
// `lambda` feeds greedy; `direction` feeds pullback (defaults to e_1).
std::unique_ptr<PlayerPolicy> make_adversary(const std::string& name, std::uint64_t seed,
                                             const ResonanceSequence* lambda, std::size_t dimension);

}  // namespace schmidt
