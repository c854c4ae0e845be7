#include <benchmark/benchmark.h>

#include "affgrow/growth.hpp"
#include "affgrow/mahler.hpp"
#include "affgrow/places.hpp"
#include "affgrow/ring.hpp"

using namespace affgrow;

namespace {

RingPtr lehmer_ring() { return number_ring({1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1}); }

void BM_RingMultiply(benchmark::State& st) {
  RingPtr r = lehmer_ring();
  RingElement x = RingElement::generator(r);
  RingElement a = pow(x, 7) + RingElement::constant(r, mpq_class(3, 5));
  RingElement b = inv(x + RingElement::one(r));
  for (auto _ : st) {
    RingElement c = a * b;
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_RingMultiply);

void BM_RingInverse(benchmark::State& st) {
  RingPtr r = lehmer_ring();
  RingElement a = RingElement::generator(r) + RingElement::constant(r, 2);
  for (auto _ : st) benchmark::DoNotOptimize(inv(a));
}
BENCHMARK(BM_RingInverse);

void BM_BallGamma2(benchmark::State& st) {
  RingPtr r = number_ring({-2, 1});
  auto [a, b] = gamma_generators(r);
  GeneratingSet sigma = GeneratingSet::from({a, b});
  const auto n = static_cast<std::size_t>(st.range(0));
  const auto workers = static_cast<unsigned>(st.range(1));
  for (auto _ : st) {
    Ball ball = grow_ball(sigma.symmetrized, n, true, 10'000'000, workers);
    benchmark::DoNotOptimize(ball.elements.size());
  }
  st.SetLabel("n=" + std::to_string(n));
}
BENCHMARK(BM_BallGamma2)->Args({6, 1})->Args({9, 1})->Args({9, 4})->Unit(benchmark::kMillisecond);

void BM_BallGolden(benchmark::State& st) {
  RingPtr r = number_ring({-1, -1, 1});
  auto [a, b] = gamma_generators(r);
  GeneratingSet sigma = GeneratingSet::from({a, b});
  for (auto _ : st) {
    Ball ball = grow_ball(sigma.symmetrized, static_cast<std::size_t>(st.range(0)), true, 10'000'000, 1);
    benchmark::DoNotOptimize(ball.elements.size());
  }
}
BENCHMARK(BM_BallGolden)->Arg(6)->Arg(10)->Unit(benchmark::kMillisecond);

void BM_IsolateRoots(benchmark::State& st) {
  std::vector<mpz_class> pi{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1};
  const int bits = static_cast<int>(st.range(0));
  for (auto _ : st) {
    clear_root_cache();
    benchmark::DoNotOptimize(isolate_roots(pi, bits));
  }
}
BENCHMARK(BM_IsolateRoots)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_MahlerLehmer(benchmark::State& st) {
  std::vector<mpz_class> pi{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1};
  for (auto _ : st) {
    clear_root_cache();
    benchmark::DoNotOptimize(mahler_measure(pi, 64));
  }
}
BENCHMARK(BM_MahlerLehmer)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
