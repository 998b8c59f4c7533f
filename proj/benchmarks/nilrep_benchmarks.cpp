#include <random>

#include <benchmark/benchmark.h>

#include "nilrep/finite_hom.hpp"
#include "nilrep/invariants.hpp"
#include "nilrep/parse.hpp"
#include "nilrep/smith.hpp"

using namespace nilrep;

namespace {

const char *const kTargets[] = {"SL3", "Sp6", "SO8", "G2", "F4", "SL6"};

void BM_EnumerateWeyl(benchmark::State &state) {
  const auto rd = build_root_datum(parse_reductive_spec(kTargets[state.range(0)]));
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_weyl(rd));
  state.SetLabel(kTargets[state.range(0)]);
}
BENCHMARK(BM_EnumerateWeyl)->DenseRange(0, 5)->Unit(benchmark::kMillisecond);

void BM_PoincareHom(benchmark::State &state) {
  const auto rd = build_root_datum(parse_reductive_spec(kTargets[state.range(0)]));
  const auto r = static_cast<std::size_t>(state.range(1));
  for (auto _ : state)
    benchmark::DoNotOptimize(poincare_hom_component(rd, r));
  state.SetLabel(std::string(kTargets[state.range(0)]) + " r=" + std::to_string(r));
}
BENCHMARK(BM_PoincareHom)
    ->ArgsProduct({{0, 1, 2, 3}, {1, 2, 4}})
    ->Unit(benchmark::kMillisecond);

void BM_HomCount(benchmark::State &state) {
  const auto g = state.range(0) == 0 ? GroupSpec::heisenberg() : GroupSpec::free_nilpotent(3, 2);
  const auto f = parse_finite_group(state.range(1) == 0 ? "Q8" : "D4 x C2");
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_homs(g, f));
}
BENCHMARK(BM_HomCount)->ArgsProduct({{0, 1}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_SmithNormalForm(benchmark::State &state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937 rng(1);
  std::uniform_int_distribution<int> entry(-50, 50);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = entry(rng);
  for (auto _ : state)
    benchmark::DoNotOptimize(smith_normal_form(m));
}
BENCHMARK(BM_SmithNormalForm)->RangeMultiplier(2)->Range(4, 32);

} // namespace

BENCHMARK_MAIN();
