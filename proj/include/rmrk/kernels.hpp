#pragma once

#include <cstddef>
#include <span>

// Data-parallel inner loops behind DenseMatrix arithmetic.
//
// Two implementations share one contract: `serial` is the reference kept for
// testing, `omp` is the OpenMP version the library dispatches to. Both use
// the same fixed-size chunking for reductions (partial sums over
// kReductionChunk consecutive entries, then an in-order sum of partials), so
// the two produce bitwise-identical results for any thread count.
namespace rmrk::kernels {

inline constexpr std::size_t kReductionChunk = 1024;

// Below this many multiply-adds the OpenMP kernels run on the calling thread.
inline constexpr std::size_t kParallelThreshold = 1 << 15;

namespace serial {

// c (m x n) = a (m x k) * b (k x n), all row-major.
void gemm(std::size_t m, std::size_t k, std::size_t n, std::span<const double> a,
          std::span<const double> b, std::span<double> c);
void transpose(std::size_t rows, std::size_t cols, std::span<const double> in,
               std::span<double> out);
double dot(std::span<const double> a, std::span<const double> b);
double sum_abs(std::span<const double> a);
// out = (1 - eta) * a + eta * b
void lerp(std::span<const double> a, std::span<const double> b, double eta,
          std::span<double> out);

}  // namespace serial

namespace omp {

void gemm(std::size_t m, std::size_t k, std::size_t n, std::span<const double> a,
          std::span<const double> b, std::span<double> c);
void transpose(std::size_t rows, std::size_t cols, std::span<const double> in,
               std::span<double> out);
double dot(std::span<const double> a, std::span<const double> b);
double sum_abs(std::span<const double> a);
void lerp(std::span<const double> a, std::span<const double> b, double eta,
          std::span<double> out);

}  // namespace omp

}  // namespace rmrk::kernels
