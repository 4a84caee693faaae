// Serial reference vs OpenMP kernels. Arg 0 = serial, 1 = parallel.
#include <benchmark/benchmark.h>

#include "wkl/cells.hpp"

using namespace wkl;

namespace {

Mode mode_of(const benchmark::State& st) { return st.range(0) ? Mode::Parallel : Mode::Serial; }

RegionPtr b3_region() {
  static RegionPtr R = std::make_shared<Region>(type_b(3, 1, 2), -1);
  return R;
}

RegionPtr affine_window() {
  static RegionPtr R = std::make_shared<Region>(preset("affA:3"), 8);
  return R;
}

void BM_KLTable_B3(benchmark::State& st) {
  for (auto _ : st) {
    KLTable kl(b3_region(), mode_of(st));
    benchmark::DoNotOptimize(kl.p(0, b3_region()->longest()));
  }
}

void BM_KLTable_AffineA2(benchmark::State& st) {
  for (auto _ : st) {
    KLTable kl(affine_window(), mode_of(st));
    benchmark::DoNotOptimize(kl.col(affine_window()->size() - 1));
  }
}

void BM_HTable_B3(benchmark::State& st) {
  KLTable kl(b3_region(), Mode::Parallel);
  for (auto _ : st) {
    HTable ht(kl, b3_region()->radius(), mode_of(st));
    benchmark::DoNotOptimize(ht.domain_size());
  }
}

void BM_CellEdges_B3(benchmark::State& st) {
  KLTable kl(b3_region(), Mode::Parallel);
  for (auto _ : st) {
    auto e = cell_edges(kl, Side::Left, mode_of(st));
    benchmark::DoNotOptimize(e.size());
  }
}

}  // namespace

BENCHMARK(BM_KLTable_B3)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KLTable_AffineA2)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HTable_B3)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CellEdges_B3)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
