#include "rmrk/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <omp.h>

namespace rmrk::kernels::omp {

namespace {

std::size_t chunk_count(std::size_t n) { return (n + kReductionChunk - 1) / kReductionChunk; }

// In-order sum of per-chunk partials; matches the serial kernels bit for bit.
template <typename ChunkFn>
double chunked_reduce(std::size_t n, ChunkFn&& chunk_sum) {
  const std::size_t chunks = chunk_count(n);
  if (n < kParallelThreshold) {
    double total = 0.0;
    for (std::size_t c = 0; c < chunks; ++c) total += chunk_sum(c);
    return total;
  }
  std::vector<double> partials(chunks, 0.0);
  const auto count = static_cast<std::ptrdiff_t>(chunks);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t c = 0; c < count; ++c) partials[c] = chunk_sum(static_cast<std::size_t>(c));
  double total = 0.0;
  for (double p : partials) total += p;
  return total;
}

}  // namespace

void gemm(std::size_t m, std::size_t k, std::size_t n, std::span<const double> a,
          std::span<const double> b, std::span<double> c) {
  const auto rows = static_cast<std::ptrdiff_t>(m);
  const bool parallel = m * k * n >= kParallelThreshold;
#pragma omp parallel for schedule(static) if (parallel)
  for (std::ptrdiff_t ii = 0; ii < rows; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    double* ci = c.data() + i * n;
    std::fill(ci, ci + n, 0.0);
    const double* ai = a.data() + i * k;
    for (std::size_t p = 0; p < k; ++p) {
      const double aip = ai[p];
      const double* bp = b.data() + p * n;
#pragma omp simd
      for (std::size_t j = 0; j < n; ++j) ci[j] += aip * bp[j];
    }
  }
}

void transpose(std::size_t rows, std::size_t cols, std::span<const double> in,
               std::span<double> out) {
  const auto r = static_cast<std::ptrdiff_t>(rows);
  const bool parallel = rows * cols >= kParallelThreshold;
#pragma omp parallel for schedule(static) if (parallel)
  for (std::ptrdiff_t ii = 0; ii < r; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    for (std::size_t j = 0; j < cols; ++j) out[j * rows + i] = in[i * cols + j];
  }
}

double dot(std::span<const double> a, std::span<const double> b) {
  const std::size_t n = a.size();
  return chunked_reduce(n, [&](std::size_t c) {
    const std::size_t lo = c * kReductionChunk;
    const std::size_t hi = std::min(n, lo + kReductionChunk);
    double partial = 0.0;
    for (std::size_t i = lo; i < hi; ++i) partial += a[i] * b[i];
    return partial;
  });
}

double sum_abs(std::span<const double> a) {
  const std::size_t n = a.size();
  return chunked_reduce(n, [&](std::size_t c) {
    const std::size_t lo = c * kReductionChunk;
    const std::size_t hi = std::min(n, lo + kReductionChunk);
    double partial = 0.0;
    for (std::size_t i = lo; i < hi; ++i) partial += std::abs(a[i]);
    return partial;
  });
}

void lerp(std::span<const double> a, std::span<const double> b, double eta,
          std::span<double> out) {
  const double keep = 1.0 - eta;
  const auto n = static_cast<std::ptrdiff_t>(a.size());
  const bool parallel = a.size() >= kParallelThreshold;
#pragma omp parallel for simd schedule(static) if (parallel)
  for (std::ptrdiff_t i = 0; i < n; ++i) out[i] = keep * a[i] + eta * b[i];
}

}  // namespace rmrk::kernels::omp
