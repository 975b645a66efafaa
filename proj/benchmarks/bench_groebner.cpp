#include <benchmark/benchmark.h>

#include <boolgb/boolgb.hpp>

namespace {

using namespace boolgb;

void BM_ReducedBasisH(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const GeneratorSet h = make_H({n});
  std::size_t size = 0;
  for (auto _ : state) {
    size = reduced_groebner_basis(h).size();
    benchmark::DoNotOptimize(size);
  }
  state.counters["gb_size"] = static_cast<double>(size);
}
BENCHMARK(BM_ReducedBasisH)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_BooleanEngineH(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const GeneratorSet h = make_H({n});
  for (auto _ : state) {
    benchmark::DoNotOptimize(field_closed_basis(h, Engine::Boolean).size());
  }
}
BENCHMARK(BM_BooleanEngineH)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_NormalFormAgainstG(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const GeneratorSet g = make_G({n});
  // Product of all L_n elements: dense, high degree, reduces to zero.
  Polynomial f = Polynomial::one();
  for (const auto& l : make_L(n)) f = f * l;
  for (auto _ : state) {
    benchmark::DoNotOptimize(normal_form(f, g.polynomials(), kDegLex));
  }
}
BENCHMARK(BM_NormalFormAgainstG)->DenseRange(2, 5);

void BM_EnumerateH(benchmark::State& state) {
  const auto n = static_cast<std::uint32_t>(state.range(0));
  const GeneratorSet h = make_H({n});
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_solutions(h).size());
  }
}
BENCHMARK(BM_EnumerateH)->DenseRange(2, 7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
