// Serial reference kernels against their OpenMP counterparts, plus the
// randomized truncated SVD against the full Jacobi SVD it replaces.
#include <benchmark/benchmark.h>

#include <cstdint>
#include <random>
#include <vector>

#include "rmrk/kernels.hpp"
#include "rmrk/matrix.hpp"
#include "rmrk/svd.hpp"

namespace {

namespace k = rmrk::kernels;

std::vector<double> filled(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> dist;
  std::vector<double> v(n);
  for (double& x : v) x = dist(rng);
  return v;
}

rmrk::DenseMatrix low_rank_plus_noise(std::size_t n, std::size_t r) {
  rmrk::DenseMatrix u(n, r), v(r, n), noise(n, n);
  const auto a = filled(n * r, 1), b = filled(r * n, 2), c = filled(n * n, 3);
  for (std::size_t i = 0; i < n * r; ++i) u.values()[i] = a[i];
  for (std::size_t i = 0; i < r * n; ++i) v.values()[i] = b[i];
  for (std::size_t i = 0; i < n * n; ++i) noise.values()[i] = 1e-3 * c[i];
  return rmrk::matmul(u, v) + noise;
}

template <auto Gemm>
void BM_gemm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = filled(n * n, 1), b = filled(n * n, 2);
  std::vector<double> c(n * n);
  for (auto _ : state) {
    Gemm(n, n, n, a, b, c);
    benchmark::DoNotOptimize(c.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n * n * n));
}

template <auto Dot>
void BM_dot(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = filled(n, 1), b = filled(n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(Dot(a, b));
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(2 * n * sizeof(double)));
}

void BM_truncated_svd(benchmark::State& state) {
  const auto a = low_rank_plus_noise(static_cast<std::size_t>(state.range(0)), 10);
  for (auto _ : state) benchmark::DoNotOptimize(rmrk::truncated_svd(a, 10, 1e-6, 200));
}

void BM_full_svd(benchmark::State& state) {
  const auto a = low_rank_plus_noise(static_cast<std::size_t>(state.range(0)), 10);
  for (auto _ : state) benchmark::DoNotOptimize(rmrk::full_svd(a));
}

}  // namespace

BENCHMARK(BM_gemm<k::serial::gemm>)->Name("gemm/serial")->Arg(64)->Arg(256);
BENCHMARK(BM_gemm<k::omp::gemm>)->Name("gemm/omp")->Arg(64)->Arg(256);
BENCHMARK(BM_dot<k::serial::dot>)->Name("dot/serial")->Arg(1 << 12)->Arg(1 << 20);
BENCHMARK(BM_dot<k::omp::dot>)->Name("dot/omp")->Arg(1 << 12)->Arg(1 << 20);
BENCHMARK(BM_truncated_svd)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_full_svd)->Arg(100)->Arg(200)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
