#include "rmrk/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace rmrk::kernels::serial {

void gemm(std::size_t m, std::size_t k, std::size_t n, std::span<const double> a,
          std::span<const double> b, std::span<double> c) {
  for (std::size_t i = 0; i < m; ++i) {
    double* ci = c.data() + i * n;
    std::fill(ci, ci + n, 0.0);
    const double* ai = a.data() + i * k;
    for (std::size_t p = 0; p < k; ++p) {
      const double aip = ai[p];
      const double* bp = b.data() + p * n;
      for (std::size_t j = 0; j < n; ++j) ci[j] += aip * bp[j];
    }
  }
}

void transpose(std::size_t rows, std::size_t cols, std::span<const double> in,
               std::span<double> out) {
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) out[j * rows + i] = in[i * cols + j];
}

double dot(std::span<const double> a, std::span<const double> b) {
  const std::size_t n = a.size();
  double total = 0.0;
  for (std::size_t lo = 0; lo < n; lo += kReductionChunk) {
    const std::size_t hi = std::min(n, lo + kReductionChunk);
    double partial = 0.0;
    for (std::size_t i = lo; i < hi; ++i) partial += a[i] * b[i];
    total += partial;
  }
  return total;
}

double sum_abs(std::span<const double> a) {
  const std::size_t n = a.size();
  double total = 0.0;
  for (std::size_t lo = 0; lo < n; lo += kReductionChunk) {
    const std::size_t hi = std::min(n, lo + kReductionChunk);
    double partial = 0.0;
    for (std::size_t i = lo; i < hi; ++i) partial += std::abs(a[i]);
    total += partial;
  }
  return total;
}

void lerp(std::span<const double> a, std::span<const double> b, double eta,
          std::span<double> out) {
  const double keep = 1.0 - eta;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = keep * a[i] + eta * b[i];
}

}  // namespace rmrk::kernels::serial
