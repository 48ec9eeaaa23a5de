#include <benchmark/benchmark.h>

#include <random>

#include "ppart/gauss.hpp"

using namespace ppart;

static CoeffElement random_element(std::mt19937_64& rng, int terms) {
  std::uniform_int_distribution<int> c(-9, 9), e(-6, 6), s(0, 2);
  std::vector<Monomial> ms;
  for (int k = 0; k < terms; ++k) {
    Monomial m;
    m.coeff = c(rng);
    m.q_exp = e(rng);
    if (int g = s(rng)) m.gauss.push_back(GaussPower{GaussSymbol{1, 3, g}, 1});
    ms.push_back(m);
  }
  return CoeffElement::from_monomials(ms);
}

static void BM_CoeffMultiply(benchmark::State& st) {
  std::mt19937_64 rng(1);
  const auto x = random_element(rng, static_cast<int>(st.range(0)));
  const auto y = random_element(rng, static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(x * y);
}
BENCHMARK(BM_CoeffMultiply)->RangeMultiplier(4)->Range(1, 64);

static void BM_GaussNumeric(benchmark::State& st) {
  const long long p = st.range(0);
  const int c = static_cast<int>(st.range(1));
  for (auto _ : st) benchmark::DoNotOptimize(gauss_numeric(1, c - 1, c, p, 2));
}
BENCHMARK(BM_GaussNumeric)->ArgsProduct({{5, 13}, {1, 3, 6}})->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();
