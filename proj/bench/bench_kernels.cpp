// Serial reference vs OpenMP kernels.
#include "clustexp/cluster.hpp"
#include "clustexp/expansion.hpp"
#include "clustexp/quiver.hpp"
#include "clustexp/strings.hpp"

#include <benchmark/benchmark.h>

using namespace clustexp;

namespace {

// Curve winding around annulus(1,1) crossing both spokes `turns` times.
CurveCrossing winding_curve(const Triangulation& t, int turns) {
  std::vector<int> crossings;
  for (int i = 0; i < turns; ++i) {
    crossings.push_back(*t.find_arc("s1"));
    crossings.push_back(*t.find_arc("s0"));
  }
  return derive_curve(t, 0, crossings);
}

Exec exec_of(const benchmark::State& s) { return s.range(0) ? Exec::parallel : Exec::serial; }

void BM_SubsetScan(benchmark::State& state) {
  const Triangulation t = annulus(1, 1);
  const StringWord w = string_of_curve(t, build_qp(t), winding_curve(t, 10));
  for (auto _ : state) benchmark::DoNotOptimize(closed_subsets_bruteforce(w, exec_of(state)));
}
BENCHMARK(BM_SubsetScan)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_PathsExpansion(benchmark::State& state) {
  const Triangulation t = annulus(1, 1);
  const CurveCrossing c = winding_curve(t, 6);
  for (auto _ : state) benchmark::DoNotOptimize(expansion_paths(t, c, exec_of(state)));
}
BENCHMARK(BM_PathsExpansion)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_OracleBfs(benchmark::State& state) {
  const Triangulation t = polygon(7);
  const std::vector<int> far{*t.find_arc("t1"), *t.find_arc("t2"), *t.find_arc("t3"), *t.find_arc("t4")};
  const CurveCrossing c = derive_curve(t, 0, far);
  for (auto _ : state) benchmark::DoNotOptimize(cluster_variable_by_flips(t, c, 20, exec_of(state)));
}
BENCHMARK(BM_OracleBfs)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
