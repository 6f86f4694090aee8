#include <benchmark/benchmark.h>

#include "orlicz/corpus.hpp"
#include "orlicz/maximal.hpp"
#include "orlicz/norms.hpp"
#include "orlicz/young.hpp"

using namespace orlicz;

namespace {

GridFunction1D grid(int n) {
  Rng rng(static_cast<std::uint64_t>(n));
  GridFunction1D f{0.0, 1.0, std::vector<double>(static_cast<std::size_t>(n))};
  for (auto& v : f.samples) v = rng.chance(0.2) ? 0.0 : rng.log_uniform(1e-2, 1e2);
  return f;
}

void BM_MaximalExact(benchmark::State& state) {
  const auto f = grid(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(maximal_1d(f, MaximalMode::exact));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MaximalExact)->RangeMultiplier(2)->Range(16, 512)->Complexity();

void BM_MaximalOracle(benchmark::State& state) {
  const auto f = grid(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(maximal_1d(f, MaximalMode::oracle));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MaximalOracle)->RangeMultiplier(2)->Range(16, 128)->Complexity();

void BM_DyadicMaximal2D(benchmark::State& state) {
  GridFieldND f;
  f.dim = 2;
  f.side = static_cast<std::size_t>(state.range(0));
  Rng rng(3);
  f.samples.resize(f.side * f.side);
  for (auto& v : f.samples) v = rng.uniform();
  for (auto _ : state) benchmark::DoNotOptimize(dyadic_maximal(f));
}
BENCHMARK(BM_DyadicMaximal2D)->Arg(16)->Arg(64)->Arg(256);

void BM_GenInverse(benchmark::State& state) {
  const YoungFunction phis[] = {power_log(), exp_minus_one(), conjugate(power_law(3)),
                                phi_theta(power_law(2), 0.75), conjugate(power_log())};
  const auto& phi = phis[state.range(0)];
  double u = 1e-3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gen_inverse(phi, u));
    u = u > 1e3 ? 1e-3 : u * 1.37;
  }
  state.SetLabel(phi.label());
}
BENCHMARK(BM_GenInverse)->DenseRange(0, 4);

void BM_ConjugateEval(benchmark::State& state) {
  const auto c = conjugate(power_log());
  double r = 1.2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(c(r));
    r = r > 100 ? 1.2 : r * 1.1;
  }
}
BENCHMARK(BM_ConjugateEval);

void BM_LuxemburgNorm(benchmark::State& state) {
  Rng rng(9);
  const auto f = random_step_function(rng, static_cast<int>(state.range(0)));
  const auto phi = power_log();
  for (auto _ : state) benchmark::DoNotOptimize(luxemburg_norm(phi, f));
}
BENCHMARK(BM_LuxemburgNorm)->Arg(8)->Arg(64);

void BM_LorentzNorm(benchmark::State& state) {
  Rng rng(10);
  const auto f = random_step_function(rng, 32);
  const auto phi = power_log();
  for (auto _ : state) benchmark::DoNotOptimize(lorentz_norm(phi, 1.0, f));
}
BENCHMARK(BM_LorentzNorm);

void BM_WeakNormFamily(benchmark::State& state) {
  Rng rng(11);
  const auto f = random_step_function(rng, 32);
  const auto phi = exp_minus_one();
  for (auto _ : state) benchmark::DoNotOptimize(weak_norm_family(phi, f));
}
BENCHMARK(BM_WeakNormFamily);

}  // namespace

BENCHMARK_MAIN();
