#include <benchmark/benchmark.h>

#include "qdp/drinfeld.hpp"
#include "qdp/presets.hpp"

using namespace qdp;

static void BM_NormalForm(benchmark::State& state) {
  Registry reg;
  const Presentation* p = reg.presentation("Fq_SL2");
  Element x = parse_element("(a + b)*(c + d)*(a + d)", p);
  for (auto _ : state) {
    Element y = x * x;
    benchmark::DoNotOptimize(y);
  }
}
BENCHMARK(BM_NormalForm);

static void BM_DeltaN(benchmark::State& state) {
  Registry reg;
  const Presentation* p = reg.presentation("Uq_sl3");
  Element x = parse_element("E13*F13", p);
  for (auto _ : state) {
    Tensor t = delta_n(x, 3);
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_DeltaN);

static void BM_Echelon(benchmark::State& state) {
  Registry reg;
  const Presentation* p = reg.presentation("Fq_SL2");
  for (auto _ : state) {
    Workspace ws(p);
    Echelon e;
    for (const Element& f : ws.i_power(2, 4)) e.add(ws.vec(f));
    e.build();
    benchmark::DoNotOptimize(e);
  }
}
BENCHMARK(BM_Echelon);

BENCHMARK_MAIN();
