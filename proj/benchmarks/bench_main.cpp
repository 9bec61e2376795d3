#include <benchmark/benchmark.h>

#include <random>

#include "schmidt/adversaries.hpp"
#include "schmidt/certify.hpp"
#include "schmidt/escape.hpp"
#include "schmidt/white_strategy.hpp"

using namespace schmidt;

namespace {

ResonanceSequence golden_lambda() {
  return ResonanceSequence::from_sizes({1, 3, 13, 55, 233, 987}, Rational(3));
}

void BM_PsiTheta(benchmark::State& state) {
  const ThetaMatrix theta = ThetaMatrix::golden();
  for (auto _ : state) benchmark::DoNotOptimize(psi_theta(theta, state.range(0)));
}
BENCHMARK(BM_PsiTheta)->Arg(100)->Arg(1000)->Arg(10000);

void BM_Theorem1Constant(benchmark::State& state) {
  const ThetaMatrix theta = ThetaMatrix::golden();
  const Point eta{Rational(-370, 987)};
  for (auto _ : state) benchmark::DoNotOptimize(theorem1_constant(theta, eta, state.range(0)));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Theorem1Constant)->Arg(100)->Arg(1000)->Arg(10000)->Complexity();

void BM_SelectCap(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int k = static_cast<int>(state.range(1));
  const StrategyParams params = derive_params(Rational(1, 4), Rational(1, 2), Rational(3), n);
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coord(-5, 5);
  std::vector<Hyperplane> planes;
  for (int i = 0; i < k; ++i) {
    IntVector normal(n);
    do {
      for (auto& x : normal) x = coord(rng);
    } while (norm_sq(normal) == 0);
    planes.push_back(Hyperplane{normal, 0});
  }
  const Ball ball{Point(n, Rational(0)), Rational(1, 2)};
  for (auto _ : state) benchmark::DoNotOptimize(select_cap(ball, planes, params));
}
BENCHMARK(BM_SelectCap)->Args({1, 8})->Args({2, 12})->Args({2, 20});

void BM_GoldenRun(benchmark::State& state) {
  const ResonanceSequence lambda = golden_lambda();
  StrategyConfig config;
  config.alpha = Rational(1, 4);
  config.beta = Rational(1, 2);
  config.M = Rational(3);
  config.blocks = 2;
  const Ball opening{Point{Rational(0)}, Rational(1, 2)};
  for (auto _ : state) {
    auto white = build_strategy(lambda, opening, config);
    auto black = greedy_black(lambda);
    const GameParams params{config.alpha, config.beta, 1};
    GameTrace trace = run_game(params, white->state().opening.initial, *white, *black, white->rounds());
    white->finish(trace.final_ball());
    benchmark::DoNotOptimize(certificate(white->state(), trace));
  }
}
BENCHMARK(BM_GoldenRun);

}  // namespace

BENCHMARK_MAIN();
