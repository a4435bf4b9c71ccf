#include <benchmark/benchmark.h>

#include "qhall/hall.hpp"
#include "qhall/presver.hpp"
#include "qhall/quantum.hpp"

namespace {

qhall::ValuedQuiver a2() {
  qhall::ValuedGraph g{{"1", "2"}, {1, 1}, qhall::IntMatrix::from_rows({{0, 1}, {1, 0}})};
  return qhall::ValuedQuiver(g, {{0, 1}});
}

qhall::ValuedQuiver a1() {
  qhall::ValuedGraph g{{"1"}, {1}, qhall::IntMatrix(1, 1)};
  return qhall::ValuedQuiver(g, {});
}

void BM_Qbinom(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) {
    for (int t = 0; t <= m; ++t) benchmark::DoNotOptimize(qhall::qbinom(m, t, 2));
  }
}
BENCHMARK(BM_Qbinom)->Arg(8)->Arg(16)->Arg(32);

void BM_ReduceMixedSerre(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const qhall::NCExpr e = qhall::serre_mixed_expr(n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(qhall::reduce_mixed(e, 1, 2));
}
BENCHMARK(BM_ReduceMixedSerre)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

// Fresh category each iteration so enumeration is measured, not the cache.
void BM_IsoClasses(benchmark::State& state) {
  const long q = state.range(0);
  const auto species = qhall::species_from_quiver(qhall::pm_quiver(a1()), q);
  for (auto _ : state) {
    qhall::ModuleCategory cat(species);
    benchmark::DoNotOptimize(cat.iso_classes({2, 2}).size());
  }
}
BENCHMARK(BM_IsoClasses)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_HallMulSerreWord(benchmark::State& state) {
  const auto species = qhall::species_from_quiver(qhall::pm_quiver(a2()), state.range(0));
  for (auto _ : state) {
    qhall::HallCtx ctx(species);
    const qhall::HallElem p = qhall::u(ctx, ctx.simple_class(0));
    const qhall::HallElem m = qhall::u(ctx, ctx.simple_class(2));
    benchmark::DoNotOptimize(qhall::hall_mul(ctx, qhall::hall_mul(ctx, p, m), qhall::hall_mul(ctx, p, p)));
  }
}
BENCHMARK(BM_HallMulSerreWord)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
