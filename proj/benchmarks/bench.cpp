#include <benchmark/benchmark.h>

#include "charzero/chartab.hpp"
#include "charzero/classes.hpp"
#include "charzero/constructions.hpp"

namespace {

using namespace charzero;

void bsgs_symmetric_8(benchmark::State& state) {
  const Group g = symmetric(8);
  for (auto _ : state) {
    const Bsgs b = build_bsgs(g.degree(), g.generators());
    benchmark::DoNotOptimize(b.order);
  }
}
BENCHMARK(bsgs_symmetric_8);

void bsgs_psl3_7(benchmark::State& state) {
  const Group g = psl3_7();
  for (auto _ : state) {
    const Bsgs b = build_bsgs(g.degree(), g.generators());
    benchmark::DoNotOptimize(b.order);
  }
}
BENCHMARK(bsgs_psl3_7);

void classes_alternating_5(benchmark::State& state) {
  const Group g = alternating(5);
  for (auto _ : state) {
    const Classes c = Classes::compute(g);
    benchmark::DoNotOptimize(c.count());
  }
}
BENCHMARK(classes_alternating_5);

void class_constants_symmetric_5(benchmark::State& state) {
  const Group g = symmetric(5);
  for (auto _ : state) {
    const Classes c = Classes::compute(g);
    long long total = 0;
    for (int i = 0; i < c.count(); ++i) total += c.constants_slice(i)[0][i];
    benchmark::DoNotOptimize(total);
  }
}
BENCHMARK(class_constants_symmetric_5);

void table_alternating_5(benchmark::State& state) {
  const Group g = alternating(5);
  for (auto _ : state) {
    const CharacterTable t = character_table(g);
    benchmark::DoNotOptimize(t.degrees.back());
  }
}
BENCHMARK(table_alternating_5);

void table_symmetric_5(benchmark::State& state) {
  const Group g = symmetric(5);
  for (auto _ : state) {
    const CharacterTable t = character_table(g);
    benchmark::DoNotOptimize(t.degrees.back());
  }
}
BENCHMARK(table_symmetric_5);

void table_extraspecial_128(benchmark::State& state) {
  const Group g = extraspecial(2, 3, ExtraspecialType::minus);
  for (auto _ : state) {
    const CharacterTable t = character_table(g);
    benchmark::DoNotOptimize(t.degrees.back());
  }
}
BENCHMARK(table_extraspecial_128);

}  // namespace

BENCHMARK_MAIN();
