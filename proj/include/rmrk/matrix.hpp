#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace rmrk {

/// Dense real matrix, row-major. Constructors reject NaN/Inf entries and
/// zero dimensions.
class DenseMatrix {
 public:
  DenseMatrix(std::size_t rows, std::size_t cols);
  DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> data);

  static DenseMatrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static DenseMatrix identity(std::size_t n);
  static DenseMatrix diagonal(std::span<const double> diag);
  static DenseMatrix diagonal(std::size_t rows, std::size_t cols, std::span<const double> diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }

  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  std::span<const double> values() const { return data_; }
  std::span<double> values() { return data_; }
  std::span<const double> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::span<double> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }

  bool same_shape(const DenseMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_;
  }
  bool all_finite() const;

  DenseMatrix transposed() const;

  DenseMatrix& operator+=(const DenseMatrix& other);
  DenseMatrix& operator-=(const DenseMatrix& other);
  DenseMatrix& operator*=(double scale);

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<double> data_;
};

DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b);
DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b);
DenseMatrix operator*(double scale, DenseMatrix a);

// Frobenius inner product and norms. Reductions go through the
// deterministic chunked kernels, so results do not depend on thread count.
double inner(const DenseMatrix& a, const DenseMatrix& b);
double frobenius_norm_sq(const DenseMatrix& a);
double frobenius_norm(const DenseMatrix& a);
double l1_norm(const DenseMatrix& a);
double max_abs(const DenseMatrix& a);
double lp_norm(const DenseMatrix& a, double p);
double lp_norm(std::span<const double> v, double p);

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b);
// a^T * b without forming a^T explicitly at the call site.
DenseMatrix matmul_tn(const DenseMatrix& a, const DenseMatrix& b);

// (1 - eta) * a + eta * b, entrywise.
DenseMatrix convex_combination(const DenseMatrix& a, const DenseMatrix& b, double eta);

}  // namespace rmrk
