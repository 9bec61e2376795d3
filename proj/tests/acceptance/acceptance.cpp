// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "schmidt/adversaries.hpp"
#include "schmidt/certify.hpp"
#include "schmidt/errors.hpp"
#include "schmidt/escape.hpp"
#include "schmidt/white_strategy.hpp"
#include "test_support.hpp"

using namespace schmidt;
using schmidt::testing::P;
using schmidt::testing::Q;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Counts violations and keeps the first few descriptions.
struct Tally {
  long checks = 0;
  long failures = 0;
  std::string first;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (failures++ == 0) first = what;
  }
  Outcome outcome(const std::string& summary) const {
    std::ostringstream s;
    s << summary << "; " << failures << "/" << checks << " violations";
    if (failures) s << " (first: " << first << ")";
    return {failures == 0, s.str()};
  }
};

double dbl(const Rational& q) { return static_cast<double>(to_long_double(q)); }

// B' inside B iff |c' - c| <= rho - rho'.
bool nested(const Ball& inner, const Ball& outer) {
  const Rational slack = outer.radius - inner.radius;
  return slack >= 0 && norm_sq(inner.center - outer.center) <= slack * slack;
}

// 1. Radius law rho_nu = rho_0 (alpha beta)^nu and nesting on random games.
Outcome game_legality() {
  Tally t;
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    std::mt19937_64 rng(seed);
    const auto [a, b] = testing::random_alpha_beta(rng);
    const int n = 1 + static_cast<int>(seed % 3);
    const int rounds = 4 + static_cast<int>(seed % 5);
    const Ball start{testing::random_point(rng, static_cast<std::size_t>(n)), testing::random_rational(rng, 1, 4, 16)};
    auto white = random_black(seed * 2 + 1);
    auto black = random_black(seed * 2 + 2);
    const GameTrace tr = run_game(GameParams{a, b, n}, start, *white, *black, rounds);
    t.expect(static_cast<int>(tr.moves.size()) == 2 * rounds, "seed " + std::to_string(seed) + " move count");
    Ball prev = start;
    for (std::size_t i = 0; i < tr.moves.size(); ++i) {
      const Move& m = tr.moves[i];
      const bool white_move = i % 2 == 0;
      const std::uint64_t nu = (i + 1) / 2;
      const Rational expected = white_move ? start.radius * pow(a * b, nu) * a : start.radius * pow(a * b, nu);
      t.expect(m.player == (white_move ? Player::kWhite : Player::kBlack), "seed " + std::to_string(seed) + " turn order");
      t.expect(m.ball.radius == expected, "seed " + std::to_string(seed) + " radius at move " + std::to_string(i));
      t.expect(nested(m.ball, prev), "seed " + std::to_string(seed) + " nesting at move " + std::to_string(i));
      prev = m.ball;
    }
  }
  return t.outcome("1000 games, n in {1,2,3}");
}

// 2. One escape round against pullback Black gains exactly gamma * rho_B.
Outcome drift_identity() {
  Tally t;
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    const auto [a, b] = testing::random_alpha_beta(rng);
    const GameParams g{a, b, 1};
    const Rational gamma = 1 + a * b - 2 * a;
    t.expect(g.gamma() == gamma, "gamma formula");
    const Ball start{P({Q(0)}), Q(1)};
    auto white = escape_policy(escape_target(start, P({Q(1)}), gamma), 5);
    auto black = pullback_black(P({Q(1)}));
    const GameTrace tr = run_game(g, start, *white, *black, 5);
    for (std::size_t i = 0; i + 1 < tr.moves.size(); i += 2) {
      const Ball& before = i == 0 ? tr.initial : tr.moves[i - 1].ball;
      const Rational gain = tr.moves[i + 1].ball.center[0] - before.center[0];
      t.expect(gain == gamma * before.radius,
               "alpha " + to_string(a) + " beta " + to_string(b) + " gain " + to_string(gain));
    }
  }
  return t.outcome("20 (alpha, beta) pairs, 5 rounds each");
}

// 3. Escape from a plane through the block-start center ends inside the
//    half-space x.(y - c) >= gamma rho / 2.
Outcome escape_postcondition() {
  Tally t;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    std::mt19937_64 rng(seed + 3000);
    const auto [a, b] = testing::random_alpha_beta(rng);
    const int n = 1 + static_cast<int>(seed % 3);
    const GameParams g{a, b, n};
    const Ball start{testing::random_point(rng, static_cast<std::size_t>(n)), testing::random_rational(rng, 1, 2, 8)};
    const IntVector u = testing::random_normal(rng, static_cast<std::size_t>(n));
    // Centers have denominator dividing 64, so 64 u.y = 64 u.c is integral.
    const Rational through = dot(u, start.center);
    IntVector scaled = u;
    for (auto& c : scaled) c *= 64;
    const Hyperplane plane{scaled, boost::multiprecision::numerator(Rational(through * 64))};
    const Point x = rational_unit_direction(u, default_direction_tolerance());
    const int rounds = escape_rounds(a, b);
    auto white = escape_policy(escape_target(start, x, g.gamma()), rounds);
    auto black = seed % 2 ? random_black(seed) : greedy_black(std::vector<Hyperplane>{plane});
    const GameTrace tr = run_game(g, start, *white, *black, rounds);
    const Ball& fin = tr.final_ball();
    // min over the final ball of x.(y - c) is x.(c_f - c) - rho_f.
    const Rational depth = dot(x, fin.center - start.center) - fin.radius;
    t.expect(depth >= g.gamma() * start.radius / 2, "seed " + std::to_string(seed) + " depth " + to_string(depth));
    // The plane through the center is then cleared on the escape side.
    t.expect(dot(u, fin.center) - through > 0, "seed " + std::to_string(seed) + " wrong side");
  }
  return t.outcome("200 trials, n in {1,2,3}, random/greedy Black");
}

// Exact sign test for the cap {z in B : x.(z - c) >= h rho}: the plane
// u.y = a misses it iff u.y - a keeps one strict sign there. Over the unit
// cap, max u.z is |u| when u.x >= h|u|, else h(u.x) + sqrt((1-h^2)(|u|^2 - (u.x)^2)).
bool cap_misses(const Ball& ball, const Point& x, const Rational& gamma, const Hyperplane& h) {
  const Rational s(h.norm_sq());
  const Rational hh = gamma / 2;
  const Rational d = dot(h.normal, x);
  const Rational base = dot(h.normal, ball.center) - Rational(h.offset);
  const Rational rim = (1 - hh * hh) * (s - d * d);
  // min of base + rho*(u.z) over the cap > 0 ?
  bool above;
  if (compare_with_sqrt(-d, hh, s) >= 0) {
    above = compare_with_sqrt(base, ball.radius, s) > 0;
  } else {
    above = compare_with_sqrt(base + ball.radius * hh * d, ball.radius, rim) > 0;
  }
  // max < 0 ?
  bool below;
  if (compare_with_sqrt(d, hh, s) >= 0) {
    below = compare_with_sqrt(-base, ball.radius, s) > 0;
  } else {
    below = compare_with_sqrt(-(base + ball.radius * hh * d), ball.radius, rim) > 0;
  }
  return above || below;
}

// 4. select_cap escapes at least ceil(omega_lb k) planes, each verified exactly.
Outcome select_cap_bound() {
  Tally t;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    std::mt19937_64 rng(seed + 4000);
    const int n = 1 + static_cast<int>(seed % 2);
    const auto [a, b] = testing::random_alpha_beta(rng);
    const StrategyParams p = derive_params(a, b, Q(3), n);
    const int k = 1 + static_cast<int>(std::uniform_int_distribution<int>(0, 19)(rng));
    const Ball ball{testing::random_point(rng, static_cast<std::size_t>(n)), testing::random_rational(rng, 1, 2, 4)};
    std::vector<Hyperplane> planes;
    for (int i = 0; i < k; ++i) {
      planes.push_back(Hyperplane{testing::random_normal(rng, static_cast<std::size_t>(n), 7),
                                  Integer(std::uniform_int_distribution<int>(-3, 3)(rng))});
    }
    CapOptions options;
    options.seed = seed;
    const CapSelection sel = select_cap(ball, planes, p, options);
    const std::string tag = "seed " + std::to_string(seed);
    t.expect(norm_sq(sel.direction) == 1, tag + " direction not unit");
    t.expect(sel.count == sel.escaped.size(), tag + " count mismatch");
    t.expect(sel.count >= required_escapes(p.omega_lb, planes.size()), tag + " below bound");
    std::size_t verified = 0;
    for (std::size_t i = 0; i < planes.size(); ++i) {
      const bool listed = std::find(sel.escaped.begin(), sel.escaped.end(), i) != sel.escaped.end();
      const bool misses = cap_misses(ball, sel.direction, p.gamma, planes[i]);
      if (listed) t.expect(misses, tag + " escaped plane " + std::to_string(i) + " meets the cap");
      verified += misses ? 1 : 0;
    }
    t.expect(verified >= required_escapes(p.omega_lb, planes.size()), tag + " verified count below bound");
  }
  return t.outcome("200 configurations, n in {1,2}, k <= 20");
}

// Every point of the ball is at distance > rho gamma / 2 from h:
// |u.c - a| - rho (1 + gamma/2) |u| > 0.
bool clear_of(const Ball& ball, const Hyperplane& h, const Rational& gamma) {
  const Rational r = dot(h.normal, ball.center) - Rational(h.offset);
  return compare_with_sqrt(abs(r), ball.radius * (1 + gamma / 2), Rational(h.norm_sq())) > 0;
}

// 5. After tau_k rounds of avoidance the ball is clear of every input plane.
Outcome avoid_postcondition() {
  Tally t;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    std::mt19937_64 rng(seed + 5000);
    const int n = 1 + static_cast<int>(seed % 2);
    const StrategyParams p = derive_params(Q(1, 4), Q(1, 2), Q(3), n);
    const int k = 1 + static_cast<int>(std::uniform_int_distribution<int>(0, 11)(rng));
    const Ball start{testing::random_point(rng, static_cast<std::size_t>(n)), Q(1, 2)};
    std::vector<Hyperplane> planes;
    for (int i = 0; i < k; ++i) {
      planes.push_back(Hyperplane{testing::random_normal(rng, static_cast<std::size_t>(n), 6),
                                  Integer(std::uniform_int_distribution<int>(-2, 2)(rng))});
    }
    auto white = avoid_hyperplanes(planes, p);
    auto black = seed % 2 ? random_black(seed) : greedy_black(planes);
    const GameTrace tr = run_game(GameParams{p.alpha, p.beta, n}, start, *white, *black, p.tau_k);
    const Ball& fin = tr.final_ball();
    for (std::size_t i = 0; i < planes.size(); ++i) {
      t.expect(clear_of(fin, planes[i], p.gamma), "seed " + std::to_string(seed) + " plane " + std::to_string(i));
    }
  }
  return t.outcome("100 trials, n in {1,2}, k <= 12");
}

// 6. Closed-form cap fraction against Monte Carlo of the definition.
Outcome omega_validation() {
  std::ostringstream s;
  double worst = 0;
  for (int n : {2, 3}) {
    for (const Rational& gamma : {Q(5, 8), Q(1, 2), Q(9, 10), Q(3, 10)}) {
      const double closed = static_cast<double>(cap_fraction(gamma, n));
      const double mc = testing::monte_carlo_cap_fraction(dbl(gamma), n, 1000000, 600 + n);
      worst = std::max(worst, std::fabs(closed - mc));
      s << "n=" << n << " gamma=" << to_string(gamma) << ": " << closed << " vs " << mc << "; ";
    }
  }
  s << "max |delta| " << worst;
  return {worst <= 5e-3, s.str()};
}

ResonanceSequence golden_sequence() {
  return lacunary_normalize(best_approximations(ThetaMatrix::golden(), 1000), Q(3));
}

StrategyConfig golden_config() {
  StrategyConfig c;
  c.alpha = Q(1, 4);
  c.beta = Q(1, 2);
  c.M = Q(3);
  c.blocks = 2;
  return c;
}

struct GoldenRun {
  std::unique_ptr<WhiteStrategy> white;
  GameTrace trace;
  Certificate cert;
};

GoldenRun golden_run(PlayerPolicy& black) {
  const ResonanceSequence lambda = golden_sequence();
  GoldenRun run;
  run.white = build_strategy(lambda, Ball{P({Q(0)}), Q(1, 2)}, golden_config());
  run.trace = run_game(GameParams{Q(1, 4), Q(1, 2), 1}, run.white->state().opening.initial, *run.white, black,
                       run.white->rounds());
  run.white->finish(run.trace.final_ball());
  run.cert = certificate(run.white->state(), run.trace);
  return run;
}

// 7. Golden thread end to end.
Outcome golden_thread() {
  Tally t;
  const ResonanceSequence lambda = golden_sequence();
  std::vector<Integer> sizes;
  for (const auto& t_sq : lambda.norms_sq) sizes.push_back(isqrt(t_sq));
  t.expect(sizes == std::vector<Integer>{1, 3, 13, 55, 233, 987}, "resonance sizes");
  const StrategyParams p = derive_params(Q(1, 4), Q(1, 2), Q(3), 1);
  t.expect(p.gamma == Q(5, 8), "gamma " + to_string(p.gamma));
  t.expect(p.t_escape == 1, "t_escape");
  t.expect(p.k == 8, "k " + std::to_string(p.k));
  t.expect(p.tau_k == 3, "tau_k " + std::to_string(p.tau_k));
  t.expect(p.epsilon == Q(5, 1889568), "epsilon " + to_string(p.epsilon));
  std::ostringstream s;
  for (std::uint64_t seed = 0; seed < 11; ++seed) {
    auto black = seed == 0 ? greedy_black(lambda) : random_black(seed);
    const GoldenRun run = golden_run(*black);
    const std::size_t r_max = static_cast<std::size_t>(run.white->state().certified_up_to());
    t.expect(run.cert.epsilon == Q(5, 1889568), "certificate epsilon");
    t.expect(run.cert.handled.size() == r_max && r_max == 5, "certified count " + std::to_string(r_max));
    const Rational margin = resonance_margin(lambda, run.cert.enclosure.center, r_max);
    t.expect(margin > run.cert.epsilon, "seed " + std::to_string(seed) + " margin " + to_string(margin));
    for (const auto& h : run.cert.handled) t.expect(h.residual_lb > run.cert.epsilon, "residual bound");
    if (seed == 0) s << "greedy eta " << to_string(run.cert.enclosure.center[0]) << " margin " << to_string(margin);
  }
  return t.outcome("gamma=5/8 t=1 k=8 tau=3 eps=5/1889568; " + s.str() + "; greedy + 10 random Black");
}

// 8. Brute-force positivity for the certified point.
Outcome brute_force_positivity() {
  auto black = greedy_black(golden_sequence());
  const GoldenRun run = golden_run(*black);
  const Point& eta = run.cert.enclosure.center;
  const ThetaMatrix theta = ThetaMatrix::golden();
  std::ostringstream s;
  bool ok = true;
  std::optional<Rational> prev;
  for (std::int64_t N : {100, 1000, 10000}) {
    const BadnessReport r = theorem1_constant(theta, eta, N);
    const bool beyond = r.validity_bound && Integer(N) > *r.validity_bound;
    ok = ok && r.value > 0 && (!prev || r.value <= *prev) && r.beyond_validity == beyond;
    ok = ok && (beyond == !r.warnings.empty());
    s << "N=" << N << ": " << to_string(r.value) << " (~" << dbl(r.value) << ", x=" << r.minimizer[0]
      << (r.beyond_validity ? ", beyond surrogate validity" : "") << "); ";
    prev = r.value;
  }
  s << "validity bound " << ThetaMatrix::golden().validity_bound()->str();
  return {ok, s.str()};
}

// Plain enumeration over [-N, N]^m in lex order, first strict minimum wins.
std::pair<Rational, std::vector<std::int64_t>> reference_theorem1(const ThetaMatrix& th, const Point& eta,
                                                                  std::int64_t N) {
  std::vector<std::int64_t> x(static_cast<std::size_t>(th.m), -N);
  std::optional<Rational> best;
  std::vector<std::int64_t> arg;
  while (true) {
    std::int64_t size = 0;
    for (auto xi : x) size = std::max<std::int64_t>(size, xi < 0 ? -xi : xi);
    if (size > 0) {
      Rational worst(0);
      for (int j = 0; j < th.n; ++j) {
        Rational L(0);
        for (int i = 0; i < th.m; ++i) L += th.at(i, j) * x[static_cast<std::size_t>(i)];
        worst = std::max(worst, nearest_int_dist(L - eta[static_cast<std::size_t>(j)]));
      }
      const Rational v = pow(worst, static_cast<std::uint64_t>(th.n)) * pow(Rational(size), static_cast<std::uint64_t>(th.m));
      if (!best || v < *best) {
        best = v;
        arg = x;
      }
    }
    int i = th.m - 1;
    while (i >= 0 && x[static_cast<std::size_t>(i)] == N) x[static_cast<std::size_t>(i--)] = -N;
    if (i < 0) break;
    ++x[static_cast<std::size_t>(i)];
  }
  return {*best, arg};
}

// 9. psi(t) = t^(-n/m) turns the Jarnik functional into the plain badness functional.
Outcome jarnik_consistency() {
  Tally t;
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    ThetaMatrix theta{1 + trial % 2, 1 + (trial / 2) % 2, {}, {}, false};
    for (int k = 0; k < theta.m * theta.n; ++k) theta.entries.push_back(testing::random_rational(rng, 0, 1, 997));
    Point eta;
    for (int j = 0; j < theta.n; ++j) eta.push_back(testing::random_rational(rng, 0, 1, 89));
    const std::int64_t N = std::uniform_int_distribution<std::int64_t>(1, theta.m == 2 ? 40 : 200)(rng);
    const BadnessReport t1 = theorem1_constant(theta, eta, N);
    const BadnessReport jr = jarnik_constant(theta, eta, PowerLaw{Q(1), Rational(theta.n, theta.m)}, N);
    const auto [ref_value, ref_arg] = reference_theorem1(theta, eta, N);
    const std::string tag = "trial " + std::to_string(trial);
    t.expect(t1.minimizer == jr.minimizer, tag + " minimizers differ");
    t.expect(t1.value == ref_value && t1.minimizer == ref_arg, tag + " disagrees with reference enumeration");
    const int g = std::gcd(theta.n, theta.m);
    t.expect(pow(jr.value, static_cast<std::uint64_t>(g)) == t1.value, tag + " power identity");
  }
  return t.outcome("50 instances, m, n <= 2, N <= 200");
}

// 10. Planted zero and do-nothing White.
Outcome negative_controls() {
  Tally t;
  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 10; ++trial) {
    ThetaMatrix theta{1 + trial % 2, 1 + (trial / 2) % 2, {}, {}, false};
    for (int k = 0; k < theta.m * theta.n; ++k) theta.entries.push_back(testing::random_rational(rng, 0, 1, 211));
    std::vector<std::int64_t> x0(static_cast<std::size_t>(theta.m));
    for (auto& v : x0) v = std::uniform_int_distribution<std::int64_t>(-7, 7)(rng);
    x0[0] = x0[0] == 0 ? 3 : x0[0];
    Point eta;
    for (int j = 0; j < theta.n; ++j) {
      Rational L(0);
      for (int i = 0; i < theta.m; ++i) L += theta.at(i, j) * x0[static_cast<std::size_t>(i)];
      eta.push_back(L);
    }
    t.expect(theorem1_constant(theta, eta, 10).value == 0, "planted theorem1 value");
    t.expect(jarnik_constant(theta, eta, PowerLaw{Q(1), Q(1)}, 10).value == 0, "planted jarnik value");
  }
  const ResonanceSequence lambda = golden_sequence();
  auto planner = build_strategy(lambda, Ball{P({Q(0)}), Q(1, 2)}, golden_config());
  auto white = concentric_policy();
  auto black = concentric_policy();
  const GameTrace tr = run_game(GameParams{Q(1, 4), Q(1, 2), 1}, planner->state().opening.initial, *white, *black,
                                planner->rounds());
  bool failed = false;
  try {
    certificate(planner->state(), tr);
  } catch (const CertificateFailed& e) {
    failed = true;
  }
  t.expect(failed, "do-nothing White was certified");
  return t.outcome("10 planted zeros, do-nothing White raises CertificateFailed");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"game legality", game_legality},
      {"gamma drift identity", drift_identity},
      {"escape postcondition", escape_postcondition},
      {"cap selection bound", select_cap_bound},
      {"avoidance postcondition", avoid_postcondition},
      {"cap fraction vs Monte Carlo", omega_validation},
      {"golden thread end to end", golden_thread},
      {"brute-force positivity", brute_force_positivity},
      {"Jarnik / badness consistency", jarnik_consistency},
      {"negative controls", negative_controls},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) ++failures;
    std::printf("[%s] %2zu. %s (%.1fs): %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), secs,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
