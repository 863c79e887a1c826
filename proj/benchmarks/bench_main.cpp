#include <benchmark/benchmark.h>

#include "sylow/arith.hpp"
#include "sylow/census.hpp"
#include "sylow/constants.hpp"
#include "sylow/density.hpp"
#include "sylow/multfn.hpp"

namespace {

void BM_PrimesUpTo(benchmark::State& state) {
  const auto y = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    auto primes = sylow::primes_up_to(y);
    benchmark::DoNotOptimize(primes.data());
  }
}
BENCHMARK(BM_PrimesUpTo)->Arg(1'000'000)->Arg(10'000'000)->Arg(100'000'000);

void BM_SummatoryF3(benchmark::State& state) {
  const auto x = static_cast<std::uint64_t>(state.range(0));
  auto f3 = sylow::make_f(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sylow::summatory(f3, x));
  }
}
BENCHMARK(BM_SummatoryF3)->Arg(1'000'000)->Arg(10'000'000)
    ->Unit(benchmark::kMillisecond);

void BM_BetaS3(benchmark::State& state) {
  const auto x = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sylow::beta_s(3, x));
  }
}
BENCHMARK(BM_BetaS3)->Arg(1'000'000)->Arg(10'000'000)->Arg(100'000'000)
    ->Unit(benchmark::kMillisecond);

void BM_LandauConstant(benchmark::State& state) {
  const auto q = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sylow::landau_constant(3, q));
  }
}
BENCHMARK(BM_LandauConstant)->Arg(1'000'000)->Arg(10'000'000)
    ->Unit(benchmark::kMillisecond);

void BM_Closure(benchmark::State& state) {
  const std::vector<std::uint64_t> gens{6, 10, 28, 36, 78, 120};
  const auto limit = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    auto b = sylow::semigroup_closure(gens, limit);
    benchmark::DoNotOptimize(b.data());
  }
}
BENCHMARK(BM_Closure)->Arg(1'000'000)->Arg(100'000'000);

}  // namespace

BENCHMARK_MAIN();
