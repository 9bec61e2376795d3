#include "schmidt/adversaries.hpp"

#include <random>

#include "schmidt/errors.hpp"

namespace schmidt {

namespace {

class Concentric : public PlayerPolicy {
 public:
  explicit Concentric(std::string note) : note_(std::move(note)) {}
  Proposal propose(const GameState& state) override { return {state.current.center, note_}; }

 private:
  std::string note_;
};

class RandomPolicy : public PlayerPolicy {
 public:
  RandomPolicy(std::uint64_t seed, unsigned grid_bits) : rng_(seed), bits_(grid_bits) {
    if (bits_ < 1 || bits_ > 60) throw InvalidArgument("random policy: grid_bits must be in [1, 60]");
  }

  Proposal propose(const GameState& state) override {
    const std::size_t n = state.current.dimension();
    const std::int64_t steps = std::int64_t{1} << bits_;
    std::uniform_int_distribution<std::int64_t> coord(-steps, steps);
    const Integer steps_sq = Integer(steps) * steps;
    std::vector<std::int64_t> k(n);
    while (true) {
      Integer len(0);
      for (auto& x : k) {
        x = coord(rng_);
        len += Integer(x) * x;
      }
      if (len <= steps_sq) break;
    }
    const Rational slack = (1 - state.factor()) * state.current.radius / Rational(steps);
    Point center = state.current.center;
    for (std::size_t i = 0; i < n; ++i) center[i] += slack * Rational(k[i]);
    return {center, {}};
  }

 private:
  std::mt19937_64 rng_;
  unsigned bits_;
};

class Greedy : public PlayerPolicy {
 public:
  Greedy(const ResonanceSequence* lambda, std::vector<Hyperplane> planes, std::optional<Rational> reach)
      : planes_(std::move(planes)), reach_(std::move(reach)) {
    if (lambda) {
      for (std::size_t r = 1; r <= lambda->size(); ++r) normals_.push_back(lambda->u(r));
    }
  }

  Proposal propose(const GameState& state) override {
    const Ball& ball = state.current;
    std::vector<Hyperplane> candidates = planes_;
    for (const auto& u : normals_) candidates.push_back(Hyperplane{u, round_half_even(dot(u, ball.center))});
    if (candidates.empty()) return {ball.center, "greedy: no planes"};

    // Nearest plane by squared distance (u.c - a)^2 / |u|^2.
    const Hyperplane* nearest = nullptr;
    Rational best_sq;
    for (const auto& h : candidates) {
      const Rational excess = dot(h.normal, ball.center) - Rational(h.offset);
      const Rational d_sq = excess * excess / Rational(h.norm_sq());
      if (!nearest || d_sq < best_sq) {
        nearest = &h;
        best_sq = d_sq;
      }
    }
    if (reach_) {
      const Rational limit = *reach_ * ball.radius;
      if (best_sq > limit * limit) return {ball.center, "greedy: out of reach"};
    }
    const Rational step = (1 - state.factor()) * ball.radius;
    if (best_sq <= step * step) return {project_onto(ball.center, *nearest), "greedy: onto plane"};
    const Rational excess = dot(nearest->normal, ball.center) - Rational(nearest->offset);
    Point d = rational_unit_direction(nearest->normal, default_direction_tolerance());
    const Rational signed_step = excess > 0 ? Rational(-step) : step;
    return {ball.center + signed_step * d, "greedy: toward plane"};
  }

 private:
  std::vector<Hyperplane> planes_;
  std::vector<IntVector> normals_;
  std::optional<Rational> reach_;
};

class Pullback : public PlayerPolicy {
 public:
  explicit Pullback(Point direction) : direction_(std::move(direction)) {
    if (norm_sq(direction_) != 1) throw InvalidArgument("pullback: direction must be an exact unit vector");
  }
  Proposal propose(const GameState& state) override {
    const Rational step = (1 - state.factor()) * state.current.radius;
    return {state.current.center - step * direction_, "pullback"};
  }

 private:
  Point direction_;
};

class Scripted : public PlayerPolicy {
 public:
  explicit Scripted(std::vector<Proposal> script) : script_(std::move(script)) {}
  Proposal propose(const GameState& state) override {
    if (next_ < script_.size()) return script_[next_++];
    return {state.current.center, {}};
  }

 private:
  std::vector<Proposal> script_;
  std::size_t next_ = 0;
};

}  // namespace

std::unique_ptr<PlayerPolicy> concentric_policy(std::string note) {
  return std::make_unique<Concentric>(std::move(note));
}

std::unique_ptr<PlayerPolicy> random_black(std::uint64_t seed, unsigned grid_bits) {
  return std::make_unique<RandomPolicy>(seed, grid_bits);
}

std::unique_ptr<PlayerPolicy> greedy_black(const ResonanceSequence& lambda, std::optional<Rational> reach) {
  return std::make_unique<Greedy>(&lambda, std::vector<Hyperplane>{}, std::move(reach));
}

std::unique_ptr<PlayerPolicy> greedy_black(std::vector<Hyperplane> planes, std::optional<Rational> reach) {
  return std::make_unique<Greedy>(nullptr, std::move(planes), std::move(reach));
}

std::unique_ptr<PlayerPolicy> pullback_black(Point direction) {
  return std::make_unique<Pullback>(std::move(direction));
}

std::unique_ptr<PlayerPolicy> scripted_black(std::vector<Point> centers) {
  std::vector<Proposal> script;
  for (auto& c : centers) script.push_back(Proposal{std::move(c), {}});
  return std::make_unique<Scripted>(std::move(script));
}

std::unique_ptr<PlayerPolicy> scripted_policy(std::vector<Proposal> proposals) {
  return std::make_unique<Scripted>(std::move(proposals));
}

std::unique_ptr<PlayerPolicy> make_adversary(const std::string& name, std::uint64_t seed,
                                             const ResonanceSequence* lambda, std::size_t dimension) {
  if (name == "random") return random_black(seed);
  if (name == "concentric") return concentric_policy();
  if (name == "greedy") {
    if (!lambda) throw InvalidArgument("greedy adversary needs a resonance sequence");
    return greedy_black(*lambda);
  }
  if (name == "pullback") {
    Point e(dimension, Rational(0));
    e[0] = 1;
    return pullback_black(std::move(e));
  }
  throw InvalidArgument("unknown adversary '" + name + "'");
}

}  // namespace schmidt
