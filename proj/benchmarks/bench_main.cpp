#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>

#include "nodalcodes/classify.hpp"
#include "nodalcodes/evencode.hpp"
#include "nodalcodes/matrix.hpp"
#include "nodalcodes/nodal.hpp"
#include "nodalcodes/symmetroid.hpp"

using namespace nodalcodes;

namespace {

void BM_CanonicalFormTableCode(benchmark::State& state) {
  const auto mu = static_cast<std::size_t>(state.range(0));
  const EvenSetCode code = classify_quartic_codes(mu).entries.front().code;
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(code));
}
BENCHMARK(BM_CanonicalFormTableCode)->Arg(12)->Arg(14)->Arg(16)->Unit(benchmark::kMicrosecond);

void BM_ClassifyQuartic(benchmark::State& state) {
  const auto mu = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(classify_quartic_codes(mu));
}
BENCHMARK(BM_ClassifyQuartic)->DenseRange(12, 16)->Unit(benchmark::kMillisecond);

void BM_SymmetroidScan(benchmark::State& state) {
  const auto p = static_cast<std::uint32_t>(state.range(0));
  const auto a = SymmetricLinearMatrix::six_point_web(p, 1);
  for (auto _ : state) benchmark::DoNotOptimize(scan_nodes_fp(a, {.threads = 1}));
}
BENCHMARK(BM_SymmetroidScan)->Arg(31)->Arg(101)->Unit(benchmark::kMillisecond);

void BM_VanishingDimension(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> coord(-50, 50);
  std::vector<Point> points;
  while (points.size() < static_cast<std::size_t>(state.range(0))) {
    Point p{coord(rng), coord(rng), coord(rng), 1};
    if (std::none_of(points.begin(), points.end(), [&](const Point& q) { return projectively_equal(p, q); })) {
      points.push_back(p);
    }
  }
  for (auto _ : state) benchmark::DoNotOptimize(vanishing_dimension(points, 5, Field::rational()));
}
BENCHMARK(BM_VanishingDimension)->Arg(20)->Arg(56)->Unit(benchmark::kMillisecond);

void BM_ExactRank(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(9);
  ExactMatrix m(n, n, Field::rational());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m.set(r, c, Scalar(static_cast<long>(rng() % 1000) - 500));
  }
  for (auto _ : state) benchmark::DoNotOptimize(exact_rank(m));
}
BENCHMARK(BM_ExactRank)->Arg(20)->Arg(60)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
