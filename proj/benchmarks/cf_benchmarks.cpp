#include <benchmark/benchmark.h>

#include "eulercf/catalog.hpp"
#include "eulercf/cf.hpp"
#include "eulercf/families.hpp"
#include "eulercf/oracle.hpp"
#include "eulercf/transforms.hpp"

namespace {

using namespace eulercf;

void BM_BrounckerConvergents(benchmark::State& state) {
  const GeneralizedCF cf = find_entry("brouncker_4_over_pi")->cf();
  const auto depth = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(convergents(cf, depth));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BrounckerConvergents)->RangeMultiplier(4)->Range(64, 1024)->Complexity();

void BM_EulerEToTolerance(benchmark::State& state) {
  const GeneralizedCF cf = find_entry("euler_e")->cf();
  EvalOptions options;
  options.tolerance = 1e-30;
  for (auto _ : state) benchmark::DoNotOptimize(eval_to_tolerance(cf, options));
}
BENCHMARK(BM_EulerEToTolerance);

void BM_TanhSinhSingularSeed(benchmark::State& state) {
  const FamilySpec spec = family_VII(1, BigRational::parse("1/2"), BigRational::parse("1/2"));
  const auto digits = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(seed_integral(spec, 0, digits));
}
BENCHMARK(BM_TanhSinhSingularSeed)->Arg(20)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_ClearDenominators(benchmark::State& state) {
  const GeneralizedCF cf = family_IV(BigRational::parse("1/3")).cf();
  const auto depth = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(clear_denominators(cf, depth).elements(depth));
}
BENCHMARK(BM_ClearDenominators)->Arg(64)->Arg(512);

}  // namespace

BENCHMARK_MAIN();
