#include <benchmark/benchmark.h>

#include "hge/catalog.hpp"
#include "hge/conjugation_orbit.hpp"
#include "hge/enumerator.hpp"
#include "hge/perm_group.hpp"
#include "hge/small_group.hpp"

using namespace hge;

namespace {

Catalog const &catalog()
{
  static Catalog const c = default_catalog();
  return c;
}

} // namespace

static void BM_GroupOrder(benchmark::State &state)
{
  auto const &entry = catalog().entries(10).back();
  for (auto _ : state)
    benchmark::DoNotOptimize(entry.group().order());
}
BENCHMARK(BM_GroupOrder);

static void BM_ConjugationOrbit(benchmark::State &state)
{
  int const degree = static_cast<int>(state.range(0));
  auto n = regular_cyclic(degree);
  for (auto _ : state)
    benchmark::DoNotOptimize(conjugation_orbit(n).size());
}
BENCHMARK(BM_ConjugationOrbit)->DenseRange(6, 10, 2)->Unit(benchmark::kMillisecond);

static void BM_AllSubgroups(benchmark::State &state)
{
  SmallGroup hol(holomorph(SmallGroup(catalog().entry(8, 3).group())));
  for (auto _ : state)
    benchmark::DoNotOptimize(all_subgroups(hol).size());
}
BENCHMARK(BM_AllSubgroups)->Unit(benchmark::kMillisecond);

static void BM_Automorphisms(benchmark::State &state)
{
  SmallGroup n(catalog().entry(8, 3).group());
  for (auto _ : state)
    benchmark::DoNotOptimize(automorphisms(n).size());
}
BENCHMARK(BM_Automorphisms);

static void BM_IntermediateFields(benchmark::State &state)
{
  auto g = catalog().entry(8, 48).group();
  for (auto _ : state)
    benchmark::DoNotOptimize(count_intermediate_fields(g));
}
BENCHMARK(BM_IntermediateFields);

static void BM_Enumerate(benchmark::State &state)
{
  int const degree = static_cast<int>(state.range(0));
  EnumerateOptions options;
  options.parallel = static_cast<int>(state.range(1));
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate(degree, catalog(), options).records.size());
}
BENCHMARK(BM_Enumerate)
    ->Args({6, 1})
    ->Args({8, 1})
    ->Args({8, 4})
    ->Args({10, 1})
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
