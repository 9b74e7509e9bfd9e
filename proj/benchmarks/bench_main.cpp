#include <benchmark/benchmark.h>

#include <vector>

#include "weyl/chow.hpp"
#include "weyl/classify.hpp"
#include "weyl/coxeter.hpp"
#include "weyl/cremona.hpp"
#include "weyl/reduction.hpp"

namespace {

weyl::CurveClass line_two_points(int r, int s) {
  std::vector<weyl::Int> m(s, weyl::Int(0));
  m[0] = 1;
  m[1] = 1;
  return weyl::CurveClass(weyl::SpaceParams(r, s), weyl::Int(1), std::move(m));
}

void ReduceFiniteCase(benchmark::State& state) {
  const weyl::CurveClass start = line_two_points(3, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(weyl::cremona_reduce(start));
  }
}
BENCHMARK(ReduceFiniteCase);

void ReduceCertifiedDivergence(benchmark::State& state) {
  const weyl::CurveClass start = line_two_points(3, 10);
  for (auto _ : state) {
    benchmark::DoNotOptimize(weyl::cremona_reduce(start));
  }
}
BENCHMARK(ReduceCertifiedDivergence);

void OrbitCubicSurface(benchmark::State& state) {
  const weyl::CurveClass start = line_two_points(2, 6);
  for (auto _ : state) {
    benchmark::DoNotOptimize(weyl::orbit_enumerate(start, 100000));
  }
}
BENCHMARK(OrbitCubicSurface);

void TitsReduction(benchmark::State& state) {
  const weyl::SpaceParams space(3, 7);
  const weyl::CoxGraph graph(space);
  const weyl::CoxFunctional f = weyl::to_functional(line_two_points(3, 7));
  for (auto _ : state) {
    benchmark::DoNotOptimize(weyl::tits_reduce(graph, f, 10000));
  }
}
BENCHMARK(TitsReduction);

void WitnessSearchDepthTwo(benchmark::State& state) {
  const weyl::CurveClass J(
      weyl::SpaceParams(3, 11), weyl::Int(13),
      {4, 4, 4, 4, 4, 1, 1, 1, 1, 1, 1});
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        weyl::spi_witness_search(J, weyl::SearchCaps{2, 64}));
  }
}
BENCHMARK(WitnessSearchDepthTwo);

void ClassifyTranslate(benchmark::State& state) {
  // A degree-27 translate of the line through two points.
  weyl::CurveClass c = line_two_points(3, 9);
  const weyl::SpaceParams space(3, 9);
  c = weyl::phi_curve(c, weyl::IndexSet(space, {2, 3, 4, 5}));
  c = weyl::phi_curve(c, weyl::IndexSet(space, {0, 5, 6, 7}));
  c = weyl::phi_curve(c, weyl::IndexSet(space, {1, 2, 6, 8}));
  for (auto _ : state) {
    benchmark::DoNotOptimize(weyl::is_weyl_line(c, -1));
  }
}
BENCHMARK(ClassifyTranslate);

}  // namespace

BENCHMARK_MAIN();
