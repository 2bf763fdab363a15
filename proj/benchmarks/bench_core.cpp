#include <benchmark/benchmark.h>

#include "duval/classification_tables.hpp"
#include "duval/conic.hpp"
#include "duval/cover_invariants.hpp"
#include "duval/duval_planes.hpp"
#include "duval/ruled_models.hpp"

using namespace duval;

static void BM_ResolveD6(benchmark::State& state) {
  const BranchModel b = build_branch(type_dn(6, 0, 0));
  for (auto _ : state) benchmark::DoNotOptimize(resolve(b));
}
BENCHMARK(BM_ResolveD6);

static void BM_SurfaceReport(benchmark::State& state) {
  const DuValConfig c = type_dn(static_cast<int>(state.range(0)), 1, 0);
  for (auto _ : state) benchmark::DoNotOptimize(surface_report(c));
}
BENCHMARK(BM_SurfaceReport)->DenseRange(2, 5);

static void BM_EnumeratePg0(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_classification(0, 0));
}
BENCHMARK(BM_EnumeratePg0);

static void BM_ChiKsqTables(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_base_point_free_table());
    benchmark::DoNotOptimize(check_one_base_point_table());
  }
}
BENCHMARK(BM_ChiKsqTables);

static void BM_XiaoCertificate(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(eliminate_xiao_case(XiaoCase::IV));
}
BENCHMARK(BM_XiaoCertificate);

static void BM_ConicSpaceDim(benchmark::State& state) {
  std::vector<ProjectivePoint> pts;
  for (int i = 0; i < state.range(0); ++i) {
    const Rational s(i * 7 + 1, 3 + i);
    pts.push_back({{1 - s * s, 2 * s, 1 + s * s}});
  }
  for (auto _ : state) benchmark::DoNotOptimize(conic_space_dim(pts));
}
BENCHMARK(BM_ConicSpaceDim)->Arg(5)->Arg(6)->Arg(12);

static void BM_CremonaRoundTrip(benchmark::State& state) {
  const ResolvedCover c = resolve(build_branch(type_dn(0, 6, 0)));
  const std::array<CenterId, 3> ids{CenterId{"q1"}, CenterId{"q1'"}, CenterId{"q2"}};
  for (auto _ : state) {
    const TransformStep s = cremona_quadratic(c.model, ids);
    benchmark::DoNotOptimize(s.apply(c.smooth_class));
  }
}
BENCHMARK(BM_CremonaRoundTrip);
BENCHMARK_MAIN();
