#include <benchmark/benchmark.h>

#include "ppart/series.hpp"

using namespace ppart;

namespace {

RootSystem system_for(int which) {
  switch (which) {
    case 0: return RootSystem({Family::A, 3});
    case 1: return RootSystem({Family::B, 3});
    case 2: return RootSystem({Family::C, 3});
    default: return RootSystem({Family::D, 4});
  }
}

}  // namespace

// Enumerate BZL(2 rho) for A3, B3, C3, D4.
static void BM_Enumerate(benchmark::State& st) {
  const RootSystem rs = system_for(static_cast<int>(st.range(0)));
  const Weight lam = 2 * rs.rho();
  EnumerateOptions o;
  o.threads = static_cast<unsigned>(st.range(1));
  std::size_t n = 0;
  for (auto _ : st) {
    auto v = enumerate_patterns(rs, lam, o);
    n = v.size();
    benchmark::DoNotOptimize(v.data());
  }
  st.SetLabel(to_string(rs.spec()));
  st.counters["patterns"] = static_cast<double>(n);
  st.counters["patterns/s"] = benchmark::Counter(static_cast<double>(n), benchmark::Counter::kIsIterationInvariantRate);
}
BENCHMARK(BM_Enumerate)->ArgsProduct({{0, 1, 2, 3}, {1, 4}})->Unit(benchmark::kMillisecond);

static void BM_WeylCharacter(benchmark::State& st) {
  const RootSystem rs = system_for(static_cast<int>(st.range(0)));
  const Weight lam = 2 * rs.rho();
  for (auto _ : st) benchmark::DoNotOptimize(weyl_character(rs, lam));
  st.SetLabel(to_string(rs.spec()));
}
BENCHMARK(BM_WeylCharacter)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

static void BM_PPart(benchmark::State& st) {
  const RootSystem rs = system_for(static_cast<int>(st.range(0)));
  const Weight lam = rs.rho() + rs.rho();
  PPartOptions o;
  o.threads = static_cast<unsigned>(st.range(2));
  for (auto _ : st) benchmark::DoNotOptimize(p_part(rs, lam, static_cast<int>(st.range(1)), o));
  st.SetLabel(to_string(rs.spec()) + " n=" + std::to_string(st.range(1)));
}
BENCHMARK(BM_PPart)->ArgsProduct({{0, 1, 2, 3}, {1, 3}, {1, 4}})->Unit(benchmark::kMillisecond);

static void BM_Tokuyama(benchmark::State& st) {
  RootSystem rs({Family::A, static_cast<int>(st.range(0))});
  const Weight lam = 2 * rs.rho();
  for (auto _ : st)
    benchmark::DoNotOptimize(
        tokuyama_quotient(rs, lam, TokuyamaShift::minus_rho, TokuyamaNormalization::q_rescaled).divisible);
}
BENCHMARK(BM_Tokuyama)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);
