#include "rmrk/svd.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include "rmrk/errors.hpp"
#include "rmrk/kernels.hpp"
#include "rmrk/rng.hpp"

namespace rmrk {

namespace {

namespace k = kernels::omp;

constexpr int kMaxJacobiSweeps = 100;

// Columns stored contiguously: col(j) is a span of length `len`.
struct ColumnSet {
  std::size_t len = 0;
  std::size_t count = 0;
  std::vector<double> data;

  ColumnSet(std::size_t len_, std::size_t count_) : len(len_), count(count_), data(len_ * count_) {}
  double* col(std::size_t j) { return data.data() + j * len; }
  const double* col(std::size_t j) const { return data.data() + j * len; }
  std::span<const double> span(std::size_t j) const { return {col(j), len}; }
};

void rotate(double* x, double* y, std::size_t len, double c, double s) {
  for (std::size_t i = 0; i < len; ++i) {
    const double xi = x[i];
    const double yi = y[i];
    x[i] = c * xi - s * yi;
    y[i] = s * xi + c * yi;
  }
}

struct JacobiOut {
  std::vector<double> sigma;  // sorted non-increasing
  ColumnSet u;                // rows x count, normalized
  ColumnSet v;                // count x count (empty when not requested)
};

// Complete columns flagged in `deficient` to an orthonormal set using
// standard basis vectors.
void complete_orthonormal(ColumnSet& cols, const std::vector<bool>& deficient) {
  std::vector<std::size_t> accepted;
  for (std::size_t j = 0; j < cols.count; ++j)
    if (!deficient[j]) accepted.push_back(j);
  // Squared residual of each unit vector e_k against the accepted columns;
  // the largest one is the best-conditioned next candidate.
  std::vector<double> residual(cols.len, 1.0);
  for (std::size_t a : accepted) {
    const double* ca = cols.col(a);
    for (std::size_t k = 0; k < cols.len; ++k) residual[k] -= ca[k] * ca[k];
  }
  for (std::size_t j = 0; j < cols.count; ++j) {
    if (!deficient[j]) continue;
    const std::size_t pick = static_cast<std::size_t>(
        std::max_element(residual.begin(), residual.end()) - residual.begin());
    double* cj = cols.col(j);
    std::fill(cj, cj + cols.len, 0.0);
    cj[pick] = 1.0;
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t a : accepted) {
        const double proj = k::dot(cols.span(a), cols.span(j));
        const double* ca = cols.col(a);
        for (std::size_t i = 0; i < cols.len; ++i) cj[i] -= proj * ca[i];
      }
    }
    const double norm = std::sqrt(k::dot(cols.span(j), cols.span(j)));
    if (!(norm > 0.0)) throw std::logic_error("orthonormal completion ran out of basis vectors");
    for (std::size_t i = 0; i < cols.len; ++i) cj[i] /= norm;
    for (std::size_t k = 0; k < cols.len; ++k) residual[k] -= cj[k] * cj[k];
    residual[pick] = -1.0;
    accepted.push_back(j);
  }
}

// One-sided (Hestenes) Jacobi on the columns of a tall matrix given as a
// column set (rows >= count). Cyclic-by-row pair ordering.
JacobiOut one_sided_jacobi(ColumnSet g, bool want_v) {
  const std::size_t n = g.count;
  const std::size_t m = g.len;
  ColumnSet v(want_v ? n : 0, want_v ? n : 0);
  if (want_v)
    for (std::size_t j = 0; j < n; ++j) v.col(j)[j] = 1.0;

  const double eps = std::numeric_limits<double>::epsilon();
  const double threshold = std::max(1e-15, std::sqrt(static_cast<double>(m)) * eps);
  constexpr double tiny = 1e-300;

  bool converged = false;
  for (int sweep = 0; sweep < kMaxJacobiSweeps && !converged; ++sweep) {
    converged = true;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double alpha = k::dot(g.span(p), g.span(p));
        const double beta = k::dot(g.span(q), g.span(q));
        if (alpha < tiny || beta < tiny) continue;
        const double gamma = k::dot(g.span(p), g.span(q));
        if (std::abs(gamma) <= threshold * std::sqrt(alpha * beta)) continue;
        converged = false;
        const double zeta = (beta - alpha) / (2.0 * gamma);
        const double t = std::copysign(1.0, zeta) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        rotate(g.col(p), g.col(q), m, c, s);
        if (want_v) rotate(v.col(p), v.col(q), n, c, s);
      }
    }
  }
  if (!converged) throw NonConvergence("one-sided Jacobi did not converge in " +
                                       std::to_string(kMaxJacobiSweeps) + " sweeps");

  std::vector<double> norms(n);
  for (std::size_t j = 0; j < n; ++j) norms[j] = std::sqrt(k::dot(g.span(j), g.span(j)));
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return norms[a] > norms[b]; });

  JacobiOut out{std::vector<double>(n), ColumnSet(m, n), ColumnSet(want_v ? n : 0, want_v ? n : 0)};
  const double smax = n > 0 ? norms[order[0]] : 0.0;
  std::vector<bool> deficient(n, false);
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t src = order[j];
    out.sigma[j] = norms[src];
    double* uj = out.u.col(j);
    if (norms[src] <= smax * 1e-14 || norms[src] < tiny) {
      deficient[j] = true;
    } else {
      const double* gs = g.col(src);
      for (std::size_t i = 0; i < m; ++i) uj[i] = gs[i] / norms[src];
    }
    if (want_v) std::copy(v.col(src), v.col(src) + n, out.v.col(j));
  }
  if (want_v && std::any_of(deficient.begin(), deficient.end(), [](bool d) { return d; }))
    complete_orthonormal(out.u, deficient);
  return out;
}

ColumnSet columns_of(const DenseMatrix& a) {
  ColumnSet cs(a.rows(), a.cols());
  k::transpose(a.rows(), a.cols(), a.values(), cs.data);
  return cs;
}

DenseMatrix from_columns(const ColumnSet& cs, std::size_t ncols) {
  DenseMatrix out(cs.len, ncols);
  for (std::size_t j = 0; j < ncols; ++j) {
    const double* c = cs.col(j);
    for (std::size_t i = 0; i < cs.len; ++i) out(i, j) = c[i];
  }
  return out;
}

void check_full_dims(const DenseMatrix& a) {
  if (std::min(a.rows(), a.cols()) > kFullSvdMaxDim)
    throw DimensionTooLarge("full_svd: min dimension " + std::to_string(std::min(a.rows(), a.cols())) +
                            " exceeds " + std::to_string(kFullSvdMaxDim));
}

DenseMatrix gaussian(std::size_t rows, std::size_t cols, Rng& rng) {
  DenseMatrix out(rows, cols);
  for (double& x : out.values()) x = rng.normal();
  return out;
}

}  // namespace

DenseMatrix SvdTriple::reconstruct() const {
  DenseMatrix scaled = u;
  for (std::size_t i = 0; i < scaled.rows(); ++i)
    for (std::size_t j = 0; j < s.size(); ++j) scaled(i, j) *= s[j];
  return matmul(scaled, v.transposed());
}

DenseMatrix orthonormal_basis(const DenseMatrix& y) {
  const std::size_t m = y.rows();
  const std::size_t l = y.cols();
  if (l > m) throw std::invalid_argument("orthonormal_basis: more columns than rows");
  ColumnSet r = columns_of(y);
  ColumnSet reflectors(m, l);
  std::vector<bool> active(l, false);

  for (std::size_t j = 0; j < l; ++j) {
    double* x = r.col(j);
    double norm_sq = 0.0;
    for (std::size_t i = j; i < m; ++i) norm_sq += x[i] * x[i];
    if (norm_sq == 0.0) continue;
    const double norm = std::sqrt(norm_sq);
    double* v = reflectors.col(j);
    for (std::size_t i = j; i < m; ++i) v[i] = x[i];
    v[j] += std::copysign(norm, x[j]);
    double vnorm_sq = 0.0;
    for (std::size_t i = j; i < m; ++i) vnorm_sq += v[i] * v[i];
    const double vnorm = std::sqrt(vnorm_sq);
    for (std::size_t i = j; i < m; ++i) v[i] /= vnorm;
    active[j] = true;
    for (std::size_t c = j; c < l; ++c) {
      double* col = r.col(c);
      double proj = 0.0;
      for (std::size_t i = j; i < m; ++i) proj += v[i] * col[i];
      for (std::size_t i = j; i < m; ++i) col[i] -= 2.0 * proj * v[i];
    }
  }

  ColumnSet q(m, l);
  for (std::size_t c = 0; c < l; ++c) q.col(c)[c] = 1.0;
  for (std::size_t jj = l; jj-- > 0;) {
    if (!active[jj]) continue;
    const double* v = reflectors.col(jj);
    for (std::size_t c = 0; c < l; ++c) {
      double* col = q.col(c);
      double proj = 0.0;
      for (std::size_t i = jj; i < m; ++i) proj += v[i] * col[i];
      for (std::size_t i = jj; i < m; ++i) col[i] -= 2.0 * proj * v[i];
    }
  }
  return from_columns(q, l);
}

SvdTriple full_svd(const DenseMatrix& a) {
  check_full_dims(a);
  if (a.rows() >= a.cols()) {
    JacobiOut j = one_sided_jacobi(columns_of(a), true);
    const std::size_t n = a.cols();
    return {from_columns(j.u, n), std::move(j.sigma), from_columns(j.v, n)};
  }
  SvdTriple t = full_svd(a.transposed());
  return {std::move(t.v), std::move(t.s), std::move(t.u)};
}

std::vector<double> singular_values(const DenseMatrix& a) {
  check_full_dims(a);
  const DenseMatrix& tall = a;
  if (a.rows() >= a.cols()) return one_sided_jacobi(columns_of(tall), false).sigma;
  return one_sided_jacobi(columns_of(a.transposed()), false).sigma;
}

double nuclear_norm(const DenseMatrix& a) {
  const auto s = singular_values(a);
  return std::accumulate(s.begin(), s.end(), 0.0);
}

std::size_t numerical_rank(const std::vector<double>& s, double rel_threshold) {
  if (s.empty() || s[0] <= 0.0) return 0;
  const double cut = rel_threshold * s[0];
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [&](double x) { return x > cut; }));
}

SvdTriple truncated_svd(const DenseMatrix& a, std::size_t rank, const SvdOptions& opts) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  const std::size_t min_dim = std::min(m, n);
  if (rank < 1 || rank > min_dim)
    throw std::invalid_argument("truncated_svd: k must be in [1, min(rows, cols)]");
  if (!(opts.tol > 0.0) || opts.max_iter < 1)
    throw std::invalid_argument("truncated_svd: tol and max_iter must be positive");

  const std::size_t block = std::min(rank + 8, min_dim);

  if (frobenius_norm_sq(a) == 0.0) {
    DenseMatrix u(m, rank), v(n, rank);
    for (std::size_t j = 0; j < rank; ++j) {
      u(j, j) = 1.0;
      v(j, j) = 1.0;
    }
    return {std::move(u), std::vector<double>(rank, 0.0), std::move(v)};
  }

  DenseMatrix omega = [&] {
    if (opts.cache && opts.cache->basis && opts.cache->basis->rows() == n &&
        opts.cache->basis->cols() == block)
      return *opts.cache->basis;
    Rng rng(opts.seed);
    return gaussian(n, block, rng);
  }();

  const DenseMatrix at = a.transposed();
  const double a_norm_sq = frobenius_norm_sq(a);
  std::vector<double> previous;
  DenseMatrix ap = matmul(a, omega);
  for (int iter = 1; iter <= opts.max_iter; ++iter) {
    const DenseMatrix q = orthonormal_basis(ap);
    // b^T = a^T q is n x block with n >= block.
    const DenseMatrix bt = matmul(at, q);
    JacobiOut j = one_sided_jacobi(columns_of(bt), true);
    // bt = P S R^T  =>  a ~= q b = (q R) S P^T, and a^T (q R) = P S exactly.
    const DenseMatrix p = from_columns(j.u, block);
    const DenseMatrix u_full = matmul(q, from_columns(j.v, block));
    ap = matmul(a, p);

    double resid_sq = 0.0;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t c = 0; c < rank; ++c) {
        const double d = ap(i, c) - u_full(i, c) * j.sigma[c];
        resid_sq += d * d;
      }
    bool settled = false;
    if (!previous.empty()) {
      double change = 0.0;
      for (std::size_t i = 0; i < rank; ++i) change = std::max(change, std::abs(j.sigma[i] - previous[i]));
      settled = change <= opts.tol * j.sigma[0];
    }
    previous = j.sigma;
    // With the other side exact, a residual below tol * sigma_1 also pins
    // every value to within tol * sigma_1.
    const double tol_sq = opts.tol * opts.tol;
    const bool done = resid_sq <= tol_sq * j.sigma[0] * j.sigma[0] || (settled && resid_sq <= tol_sq * a_norm_sq);
    if (!done) continue;

    DenseMatrix u(m, rank), v(n, rank);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t c = 0; c < rank; ++c) u(i, c) = u_full(i, c);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t c = 0; c < rank; ++c) v(i, c) = p(i, c);
    if (opts.cache) opts.cache->basis = p;
    j.sigma.resize(rank);
    return {std::move(u), std::move(j.sigma), std::move(v)};
  }
  if (opts.cache) opts.cache->basis.reset();
  throw NonConvergence("truncated_svd: no convergence within " + std::to_string(opts.max_iter) +
                       " subspace iterations");
}

SvdTriple truncated_svd(const DenseMatrix& a, std::size_t k, double tol, int max_iter, std::uint64_t seed) {
  SvdOptions opts;
  opts.tol = tol;
  opts.max_iter = max_iter;
  opts.seed = seed;
  return truncated_svd(a, k, opts);
}

SingularPair top_singular_pair(const DenseMatrix& a, const SvdOptions& opts) {
  if (frobenius_norm_sq(a) == 0.0) throw std::invalid_argument("top_singular_pair: zero matrix");
  SvdTriple t = truncated_svd(a, 1, opts);
  SingularPair out;
  out.sigma = t.s[0];
  out.u.resize(a.rows());
  out.v.resize(a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) out.u[i] = t.u(i, 0);
  for (std::size_t i = 0; i < a.cols(); ++i) out.v[i] = t.v(i, 0);
  return out;
}

SingularPair top_singular_pair(const DenseMatrix& a, double tol, int max_iter, std::uint64_t seed) {
  SvdOptions opts;
  opts.tol = tol;
  opts.max_iter = max_iter;
  opts.seed = seed;
  return top_singular_pair(a, opts);
}

}  // namespace rmrk
