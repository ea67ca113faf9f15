// Parallel Ext table against the serial per-entry reference.

#include <benchmark/benchmark.h>

#include "quiverlab/constructions.hpp"
#include "quiverlab/ext_table.hpp"

using namespace quiverlab;

namespace {

std::vector<Representation> spi(const AlgebraPtr& a) {
  std::vector<Representation> out;
  for (VertexId v = 0; v < a->vertex_count(); ++v) {
    out.push_back(simple(a, v));
    out.push_back(projective(a, v));
    out.push_back(injective(a, v));
  }
  return out;
}

const std::vector<std::string>& names() {
  static const std::vector<std::string> n{"aus2", "pi3", "boundary", "hnak"};
  return n;
}

void BM_ExtTableParallel(benchmark::State& state) {
  const auto mods = spi(fixture(names().at(state.range(0))).algebra);
  for (auto _ : state) benchmark::DoNotOptimize(ext_table(mods, mods, 3));
  state.SetLabel(names().at(state.range(0)));
}

void BM_ExtTableSerial(benchmark::State& state) {
  const auto mods = spi(fixture(names().at(state.range(0))).algebra);
  for (auto _ : state) benchmark::DoNotOptimize(ext_table_serial(mods, mods, 3));
  state.SetLabel(names().at(state.range(0)));
}

}  // namespace

BENCHMARK(BM_ExtTableParallel)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExtTableSerial)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
