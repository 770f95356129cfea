#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "rmrk/matrix.hpp"

namespace rmrk {

/// Thin singular value decomposition a ~= u * diag(s) * v^T.
/// u is m x k and v is n x k with orthonormal columns; s is non-increasing
/// and non-negative.
struct SvdTriple {
  DenseMatrix u;
  std::vector<double> s;
  DenseMatrix v;

  std::size_t rank() const { return s.size(); }
  DenseMatrix reconstruct() const;
};

/// Carries the right singular subspace between calls on slowly changing
/// matrices (successive solver iterates). An empty or wrongly shaped basis
/// is ignored and replaced by a seeded Gaussian start.
struct SubspaceCache {
  std::optional<DenseMatrix> basis;
};

struct SvdOptions {
  double tol = 1e-9;
  int max_iter = 300;
  std::uint64_t seed = 0;
  SubspaceCache* cache = nullptr;
};

/// Leading k singular triples by randomized subspace iteration with
/// oversampling (block size min(k + 8, min(m, n))) and a Rayleigh-Ritz step
/// on every pass. Stops once ||a v - u diag(s)||_F <= tol * sigma_1, or once
/// it is <= tol * ||a||_F and the top-k values moved by at most tol * sigma_1
/// since the previous pass.
///
/// Throws NonConvergence when max_iter passes are not enough.
SvdTriple truncated_svd(const DenseMatrix& a, std::size_t k, const SvdOptions& opts = {});
SvdTriple truncated_svd(const DenseMatrix& a, std::size_t k, double tol, int max_iter,
                        std::uint64_t seed = 0);

inline constexpr std::size_t kFullSvdMaxDim = 2048;

/// Full thin SVD (k = min(m, n)) by one-sided Jacobi rotations.
/// Throws DimensionTooLarge when min(m, n) > kFullSvdMaxDim.
SvdTriple full_svd(const DenseMatrix& a);

/// Singular values only; skips accumulating the singular vectors.
std::vector<double> singular_values(const DenseMatrix& a);

struct SingularPair {
  std::vector<double> u;
  double sigma = 0.0;
  std::vector<double> v;
};

SingularPair top_singular_pair(const DenseMatrix& a, const SvdOptions& opts = {});
SingularPair top_singular_pair(const DenseMatrix& a, double tol, int max_iter,
                               std::uint64_t seed = 0);

double nuclear_norm(const DenseMatrix& a);

/// Count of singular values above rel_threshold * s[0]; 0 for an all-zero s.
std::size_t numerical_rank(const std::vector<double>& s, double rel_threshold = 1e-8);

/// Orthonormal basis (m x l, m >= l) of the column space of y via Householder
/// reflections. Rank-deficient input still yields orthonormal columns.
DenseMatrix orthonormal_basis(const DenseMatrix& y);

}  // namespace rmrk
