#include "rmrk/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "rmrk/kernels.hpp"

namespace rmrk {

namespace k = kernels::omp;

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("DenseMatrix: dimensions must be positive");
}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("DenseMatrix: dimensions must be positive");
  if (data_.size() != rows * cols)
    throw std::invalid_argument("DenseMatrix: data length " + std::to_string(data_.size()) +
                                " does not match " + std::to_string(rows) + "x" +
                                std::to_string(cols));
  if (!all_finite()) throw std::invalid_argument("DenseMatrix: non-finite entry");
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i) out(i, i) = 1.0;
  return out;
}

DenseMatrix DenseMatrix::diagonal(std::span<const double> diag) {
  return diagonal(diag.size(), diag.size(), diag);
}

DenseMatrix DenseMatrix::diagonal(std::size_t rows, std::size_t cols, std::span<const double> diag) {
  DenseMatrix out(rows, cols);
  const std::size_t n = std::min({rows, cols, diag.size()});
  for (std::size_t i = 0; i < n; ++i) {
    if (!std::isfinite(diag[i])) throw std::invalid_argument("DenseMatrix: non-finite entry");
    out(i, i) = diag[i];
  }
  return out;
}

bool DenseMatrix::all_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](double v) { return std::isfinite(v); });
}

DenseMatrix DenseMatrix::transposed() const {
  DenseMatrix out(cols_, rows_);
  k::transpose(rows_, cols_, data_, out.data_);
  return out;
}

DenseMatrix& DenseMatrix::operator+=(const DenseMatrix& other) {
  if (!same_shape(other)) throw std::invalid_argument("DenseMatrix +=: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

DenseMatrix& DenseMatrix::operator-=(const DenseMatrix& other) {
  if (!same_shape(other)) throw std::invalid_argument("DenseMatrix -=: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

DenseMatrix& DenseMatrix::operator*=(double scale) {
  for (double& v : data_) v *= scale;
  return *this;
}

DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) { return a += b; }
DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) { return a -= b; }
DenseMatrix operator*(double scale, DenseMatrix a) { return a *= scale; }

double inner(const DenseMatrix& a, const DenseMatrix& b) {
  if (!a.same_shape(b)) throw std::invalid_argument("inner: shape mismatch");
  return k::dot(a.values(), b.values());
}

double frobenius_norm_sq(const DenseMatrix& a) { return k::dot(a.values(), a.values()); }

double frobenius_norm(const DenseMatrix& a) { return std::sqrt(frobenius_norm_sq(a)); }

double l1_norm(const DenseMatrix& a) { return k::sum_abs(a.values()); }

double max_abs(const DenseMatrix& a) {
  double best = 0.0;
  for (double v : a.values()) best = std::max(best, std::abs(v));
  return best;
}

double lp_norm(std::span<const double> v, double p) {
  double scale = 0.0;
  for (double x : v) scale = std::max(scale, std::abs(x));
  if (scale == 0.0) return 0.0;
  double acc = 0.0;
  for (double x : v) acc += std::pow(std::abs(x) / scale, p);
  return scale * std::pow(acc, 1.0 / p);
}

double lp_norm(const DenseMatrix& a, double p) { return lp_norm(a.values(), p); }

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matmul: inner dimension mismatch");
  DenseMatrix c(a.rows(), b.cols());
  k::gemm(a.rows(), a.cols(), b.cols(), a.values(), b.values(), c.values());
  return c;
}

DenseMatrix matmul_tn(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("matmul_tn: row mismatch");
  return matmul(a.transposed(), b);
}

DenseMatrix convex_combination(const DenseMatrix& a, const DenseMatrix& b, double eta) {
  if (!a.same_shape(b)) throw std::invalid_argument("convex_combination: shape mismatch");
  DenseMatrix out(a.rows(), a.cols());
  k::lerp(a.values(), b.values(), eta, out.values());
  return out;
}

}  // namespace rmrk
