#include <benchmark/benchmark.h>

#include <cstdlib>
#include <string>

#include "moebius/hyperbolic.hpp"
#include "moebius/reconstruction.hpp"

namespace moebius {
namespace {

// Points 0, 1, 3, 7, ... on the line (distances grow so no three are evenly
// spaced).
SemiMetricSpace line(std::int64_t n) {
  Labels labels;
  std::vector<long> x;
  for (std::int64_t i = 0; i < n; ++i) {
    labels.push_back("p" + std::to_string(i));
    x.push_back((1L << i) - 1);
  }
  return SemiMetricSpace::from_function(labels, std::nullopt, Scale::multiplicative,
                                        [&](PointId i, PointId j) {
                                          return Magnitude::from_rational(Rational(std::labs(x[i] - x[j])));
                                        });
}

GromovProductModel cycle(std::int64_t k) {
  MetricSource source;
  for (std::int64_t i = 0; i < k; ++i) {
    source.points.push_back("c" + std::to_string(i));
  }
  for (std::int64_t i = 0; i < k; ++i) {
    for (std::int64_t j = 0; j < k; ++j) {
      const std::int64_t gap = std::abs(i - j);
      source.dist.emplace_back(std::min(gap, k - gap));
    }
  }
  source.basepoint = "c0";
  return build_model(source);
}

void BM_MoebiusOf(benchmark::State& state) {
  const SemiMetricSpace s = line(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(moebius_of(s));
  }
}
BENCHMARK(BM_MoebiusOf)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_CheckAxioms(benchmark::State& state) {
  const SubMoebiusMap m = moebius_of(line(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_axioms(m));
  }
}
BENCHMARK(BM_CheckAxioms)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_IsMoebius(benchmark::State& state) {
  const SubMoebiusMap m = moebius_of(line(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_moebius(m));
  }
}
BENCHMARK(BM_IsMoebius)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_Symmetrize(benchmark::State& state) {
  const GromovProductModel model = cycle(state.range(0));
  const SubMoebiusMap raw = perturb(model, 4 * model.h(), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(symmetrize(raw));
  }
}
BENCHMARK(BM_Symmetrize)->DenseRange(6, 8, 1)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace moebius

BENCHMARK_MAIN();
