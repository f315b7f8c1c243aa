#include <benchmark/benchmark.h>

#include "cucalc/alpha.hpp"
#include "cucalc/axioms.hpp"
#include "cucalc/comparison.hpp"
#include "cucalc/divisibility.hpp"
#include "cucalc/modeltext.hpp"

using namespace cucalc;

namespace {

void BM_WayBelowPointwise(benchmark::State& state) {
  CuModel m = builtin_model("nbar3");
  Cap cap(3, 1);
  auto elems = m.enumerate(cap);
  std::size_t i = 0, j = elems.size() / 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(m.way_below(elems[i], elems[j]));
    i = (i + 1) % elems.size();
    j = (j + 7) % elems.size();
  }
}
BENCHMARK(BM_WayBelowPointwise);

void BM_CapEnumeration(benchmark::State& state) {
  CuModel m = builtin_model("nbar3");
  Cap cap(state.range(0), 1);
  for (auto _ : state) {
    auto elems = m.enumerate(cap);
    benchmark::DoNotOptimize(elems.size());
  }
}
BENCHMARK(BM_CapEnumeration)->Arg(2)->Arg(4)->Arg(6);

void BM_AlmostAlgebraicOrder(benchmark::State& state) {
  CuModel m = builtin_model("nbar2");
  Cap cap(state.range(0), 1);
  for (auto _ : state) {
    auto r = check_O5(m, cap);
    benchmark::DoNotOptimize(r.verdict);
  }
}
BENCHMARK(BM_AlmostAlgebraicOrder)->Arg(2)->Arg(4);

void BM_WeakCancellation(benchmark::State& state) {
  CuModel m = builtin_model("nbar2");
  Cap cap(state.range(0), 1);
  for (auto _ : state) {
    auto r = check_weak_cancellation(m, cap);
    benchmark::DoNotOptimize(r.verdict);
  }
}
BENCHMARK(BM_WeakCancellation)->Arg(2)->Arg(4);

void BM_DivisibilitySearch(benchmark::State& state) {
  CuModel m = builtin_model("nbar2");
  Cap cap(6, 1);
  Element x = m.parse_literal("(4,4)");
  for (auto _ : state) {
    auto res = is_divisible(m, x, {2, 2, true, false}, cap);
    benchmark::DoNotOptimize(res.certificates.size());
  }
}
BENCHMARK(BM_DivisibilitySearch);

void BM_AlphaGrid(benchmark::State& state) {
  CuModel m = builtin_model("zcu");
  Cap cap(4, 4);
  auto grid = rank_grid(m, cap);
  std::size_t i = 0;
  for (auto _ : state) {
    auto a = alpha(m, grid[i], cap);
    benchmark::DoNotOptimize(a.value);
    i = (i + 1) % grid.size();
  }
}
BENCHMARK(BM_AlphaGrid);

void BM_ComparisonSuite(benchmark::State& state) {
  CuModel m = builtin_model("nbar2");
  Element u = m.parse_literal("(1,1)");
  Cap cap(3, 2);
  for (auto _ : state) {
    auto rep = comparison_suite(m, u, cap);
    benchmark::DoNotOptimize(rep.radius_of_comparison.size());
  }
}
BENCHMARK(BM_ComparisonSuite);

}  // namespace

BENCHMARK_MAIN();
