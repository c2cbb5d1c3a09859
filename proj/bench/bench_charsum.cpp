// Serial (workers = 1) vs OpenMP (workers = 0, all threads) timings for the
// counter-sweep kernels. Field and character construction stay outside the
// timed loop.
#include <benchmark/benchmark.h>

#include "gf2gauss/charsum.hpp"
#include "gf2gauss/gf2field.hpp"

using namespace gf2gauss;

namespace {

void bm_gauss(benchmark::State& state, int workers) {
  const int degree = static_cast<int>(state.range(0));
  const FieldContext ctx = build_field(degree);
  const CharacterSpec chi = make_character(ctx, 3);
  for (auto _ : state) {
    GaussSumRecord rec = gauss_sum(chi, 1, workers);
    benchmark::DoNotOptimize(rec.value);
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(ctx.size()));
}

void bm_kummer(benchmark::State& state, int workers) {
  const int degree = static_cast<int>(state.range(0));
  const FieldContext ctx = build_field(degree);
  const CharacterSpec chi = make_character(ctx, 3);
  for (auto _ : state) {
    CycloSum sum = kummer_sum(chi, 1, workers);
    benchmark::DoNotOptimize(sum);
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(ctx.size()));
}

void bm_parseval(benchmark::State& state, int workers) {
  const int degree = static_cast<int>(state.range(0));
  const FieldContext ctx = build_field(degree);
  const CharacterSpec chi = make_character(ctx, 3);
  for (auto _ : state) {
    std::uint64_t total = parseval_total(chi, workers);
    benchmark::DoNotOptimize(total);
  }
  // One full sweep per beta.
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(ctx.size()) *
                          static_cast<std::int64_t>(ctx.size()));
}

void gauss_serial(benchmark::State& s) { bm_gauss(s, 1); }
void gauss_parallel(benchmark::State& s) { bm_gauss(s, 0); }
void kummer_serial(benchmark::State& s) { bm_kummer(s, 1); }
void kummer_parallel(benchmark::State& s) { bm_kummer(s, 0); }
void parseval_serial(benchmark::State& s) { bm_parseval(s, 1); }
void parseval_parallel(benchmark::State& s) { bm_parseval(s, 0); }

}  // namespace

BENCHMARK(gauss_serial)->Arg(14)->Arg(16)->Arg(18)->Unit(benchmark::kMillisecond);
BENCHMARK(gauss_parallel)->Arg(14)->Arg(16)->Arg(18)->Unit(benchmark::kMillisecond);
BENCHMARK(kummer_serial)->Arg(14)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(kummer_parallel)->Arg(14)->Arg(16)->Unit(benchmark::kMillisecond);
BENCHMARK(parseval_serial)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(parseval_parallel)->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
