#include <benchmark/benchmark.h>

#include <random>

#include "knotgrid/construction.hpp"
#include "knotgrid/invariants.hpp"
#include "knotgrid/metrics.hpp"
#include "knotgrid/reduction.hpp"

using namespace knotgrid;

static void KauffmanBracket(benchmark::State& state) {
  const PDCode pd = torus_knot_pd(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(kauffman_bracket(pd));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(KauffmanBracket)->DenseRange(3, 17, 2)->Complexity();

static void DiagramDeterminant(benchmark::State& state) {
  const PDCode pd = torus_knot_pd(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(pd_determinant(pd));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(DiagramDeterminant)->RangeMultiplier(2)->Range(3, 193)->Complexity();

static void AlexanderPolynomial(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(alexander_of_two_braid(q));
  }
}
BENCHMARK(AlexanderPolynomial)->Arg(3)->Arg(21)->Arg(101);

static void BuildConfiguration(benchmark::State& state) {
  const auto rows = static_cast<std::uint32_t>(state.range(0));
  const auto cols = static_cast<std::uint32_t>(state.range(1));
  std::mt19937_64 rng(7);
  BitArray bits = BitArray::zeros(rows, cols);
  for (auto& b : bits.bits) b = rng() & 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_configuration(bits, 16));
  }
}
BENCHMARK(BuildConfiguration)->Args({1, 1})->Args({2, 2})->Args({4, 4});

static void DecodeTrusted(benchmark::State& state) {
  BitArray bits = BitArray::zeros(3, 3);
  bits.set(1, 2, 1);
  const Configuration config = build_configuration(bits, 16);
  for (auto _ : state) {
    benchmark::DoNotOptimize(decode_configuration(config, DecodeMode::trusted));
  }
}
BENCHMARK(DecodeTrusted);

static void DecodeVerified(benchmark::State& state) {
  BitArray bits = BitArray::zeros(3, 3);
  bits.set(1, 2, 1);
  const Configuration config = build_configuration(bits, 16);
  for (auto _ : state) {
    benchmark::DoNotOptimize(decode_configuration(config, DecodeMode::verified));
  }
}
BENCHMARK(DecodeVerified);

static void HausdorffBruteForce(benchmark::State& state) {
  std::mt19937_64 rng(11);
  std::normal_distribution<double> gauss(0.0, 1.0);
  const auto make = [&](std::size_t count) {
    CompactSample s;
    for (std::size_t i = 0; i < count; ++i) s.points.push_back({gauss(rng), gauss(rng), gauss(rng)});
    return s;
  };
  const CompactSample a = make(static_cast<std::size_t>(state.range(0)));
  const CompactSample b = make(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hausdorff_distance(a, b));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(HausdorffBruteForce)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

static void VerifyProperties(benchmark::State& state) {
  const Configuration config = build_configuration(BitArray::zeros(3, 3), 16);
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_properties(config));
  }
}
BENCHMARK(VerifyProperties);

BENCHMARK_MAIN();
