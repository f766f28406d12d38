#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "acluster/kernels.hpp"

namespace k = acluster::kernels;

namespace {

std::vector<double> random_rows(std::size_t rows, std::size_t dim) {
  std::mt19937_64 gen(1);
  std::normal_distribution<double> n;
  std::vector<double> m(rows * dim);
  for (double& v : m) v = n(gen);
  return m;
}

std::vector<std::int32_t> random_labels(int side) {
  std::mt19937_64 gen(2);
  std::vector<std::int32_t> l(static_cast<std::size_t>(side) * side);
  for (auto& v : l) v = static_cast<std::int32_t>(gen() % 5) - 1;
  return l;
}

template <double (*F)(std::span<const double>, std::size_t)>
void BM_MaxPairwise(benchmark::State& state) {
  const auto m = random_rows(static_cast<std::size_t>(state.range(0)), 50);
  for (auto _ : state) benchmark::DoNotOptimize(F(m, 50));
}

template <void (*F)(std::span<double>, double)>
void BM_Evaporate(benchmark::State& state) {
  std::vector<double> f(static_cast<std::size_t>(state.range(0)) * state.range(0), 1.0);
  for (auto _ : state) {
    F(f, 1e-9);
    benchmark::ClobberMemory();
  }
}

template <k::ClassCounts (*F)(std::span<const std::int32_t>, int, int)>
void BM_EntropyCounts(benchmark::State& state) {
  const int side = static_cast<int>(state.range(0));
  const auto l = random_labels(side);
  for (auto _ : state) benchmark::DoNotOptimize(F(l, side, 4));
}

}  // namespace

BENCHMARK(BM_MaxPairwise<k::max_pairwise_rms_serial>)->Arg(931)->Arg(4000);
BENCHMARK(BM_MaxPairwise<k::max_pairwise_rms_parallel>)->Arg(931)->Arg(4000);
BENCHMARK(BM_Evaporate<k::evaporate_serial>)->Arg(57)->Arg(512)->Arg(2048);
BENCHMARK(BM_Evaporate<k::evaporate_parallel>)->Arg(57)->Arg(512)->Arg(2048);
BENCHMARK(BM_EntropyCounts<k::entropy_counts_serial>)->Arg(57)->Arg(512)->Arg(2048);
BENCHMARK(BM_EntropyCounts<k::entropy_counts_parallel>)->Arg(57)->Arg(512)->Arg(2048);

BENCHMARK_MAIN();
