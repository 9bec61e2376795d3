#pragma once

#include <optional>
#include <vector>

#include "schmidt/geometry.hpp"
#include "schmidt/resonance.hpp"

namespace schmidt {

// Constants of the winning strategy for a fixed (alpha, beta, M, n).
struct StrategyParams {
  Rational alpha;
  Rational beta;
  Rational M;
  int dimension = 1;
  Rational gamma;          // 1 + alpha*beta - 2*alpha
  long double omega = 0;   // cap fraction, informational
  Rational omega_lb;       // omega rounded down; every derived count uses this
  int t_escape = 0;        // smallest t with (alpha*beta)^t < gamma/2
  int subblocks = 0;       // ceil(log k / log(1/(1 - omega_lb)))
  int k = 0;
  int tau_k = 0;           // t_escape * subblocks
  Rational epsilon;        // gamma / (4 M^(2+k))

  Rational shrink() const { return alpha * beta; }
};

// Smallest t >= 1 with (alpha*beta)^t < gamma/2, decided exactly.
int escape_rounds(const Rational& alpha, const Rational& beta);

// Smallest L >= 0 with k (1 - omega)^L <= 1, decided exactly.
int subblock_count(int k, const Rational& omega_lb);

// tau * log(1/(alpha*beta)) / log M + 2 < k, decided as
// (1/(alpha*beta))^tau < M^(k-2).
bool block_length_condition(int k, int tau, const Rational& alpha_beta, const Rational& M);

// Scans k = 1, 2, ... for the first k satisfying block_length_condition with
// tau = t_escape * subblock_count(k); `k_override` skips the scan but is
// still checked.
StrategyParams derive_params(const Rational& alpha, const Rational& beta, const Rational& M,
                             int dimension, std::optional<int> k_override = std::nullopt);

// Block indices r_1 = 1 <= r_2 <= ...; block j (0-based) handles the
// resonances r in (r_j, r_{j+1}] with r_0 = 0.
struct BlockSchedule {
  Rational rho0;
  int blocks = 0;
  std::vector<int> r;  // r[0] = r_1, r[j] = r_{j+1}
  std::vector<int> q;  // q[j-1] = r_{j+1} - r_j for j >= 1

  // First and last resonance index handled by block j (0-based); first > last
  // means the block handles nothing new.
  int first_handled(int block) const { return block == 0 ? 1 : r.at(block - 1) + 1; }
  int last_handled(int block) const { return r.at(block); }
};

// r_{j+1} for j >= 1 is the unique index with
//   t_{r_{j+1}} < 1/(2 rho0 (alpha beta)^(j tau_k)) <= t_{r_{j+1}+1}.
// Requires rho0 < 1/t_1. Throws ScheduleInfeasible when Lambda is too short,
// when a block would need q_j >= k, or when the window inequality fails.
BlockSchedule block_schedule(const StrategyParams& params, const ResonanceSequence& lambda,
                             const Rational& rho0, int blocks);

// Re-checks both sides of
//   1/(2 t_{r_{j+1}}) > rho0 (alpha beta)^(j tau) >= 1/(2 M^2 t_{r_{j+1}})
// for every j >= 1 of the schedule, on squares.
bool schedule_window_holds(const StrategyParams& params, const ResonanceSequence& lambda,
                           const BlockSchedule& schedule);

// One plane per r in (r_lo, r_hi]: (u^(r), a) with a the nearest integer to
// u^(r).center (ties to even).
std::vector<Hyperplane> dangerous_hyperplanes(const Ball& ball, const ResonanceSequence& lambda,
                                              int r_lo, int r_hi);

struct IndexedPlane {
  int r;
  Hyperplane plane;
};

// Every plane (u^(r), a), r in (r_lo, r_hi], whose residual over `ball` can be
// <= `slack`: a superset of the planes that can threaten the ball.
std::vector<IndexedPlane> resonant_planes_near(const Ball& ball, const ResonanceSequence& lambda,
                                               int r_lo, int r_hi, const Rational& slack);

}  // namespace schmidt
