#include "rmrk/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace rmrk {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

double sign(double x) { return x > 0.0 ? 1.0 : (x < 0.0 ? -1.0 : 0.0); }

DenseMatrix with_values(const DenseMatrix& shape, std::vector<double> values) {
  return DenseMatrix(shape.rows(), shape.cols(), std::move(values));
}

LmoResult zero_lmo(const DenseMatrix& grad) { return {DenseMatrix(grad.rows(), grad.cols()), true}; }

// Stationarity of the lp projection for one entry a > 0 with multiplier
// lambda: y + lambda * p * y^(p-1) = a. Solved in u = y^(p-1), where the
// equation u^(1/(p-1)) + lambda * p * u = a is convex and increasing, so
// Newton from a point above the root descends onto it without overshoot.
struct LpEntry {
  double y;
  double dy;  // d y / d lambda
};

LpEntry lp_entry(double a, double lambda, double p) {
  if (a == 0.0) return {0.0, 0.0};
  const double q = 1.0 / (p - 1.0);
  const double lp = lambda * p;
  double u = std::pow(a, p - 1.0);
  if (lp > 0.0) u = std::min(u, a / lp);
  for (int it = 0; it < 100; ++it) {
    const double uq = std::pow(u, q);
    const double h = uq + lp * u - a;
    if (h <= 0.0) break;
    const double step = h / (q * uq / u + lp);
    u = std::max(u - step, 0.0);
    if (step <= 1e-16 * u) break;
  }
  const double uq = std::pow(u, q);
  if (u == 0.0) return {0.0, 0.0};
  const double du = -p * u / (q * uq / u + lp);
  return {uq, q * uq / u * du};
}

DenseMatrix low_rank_from(const SvdTriple& t, const std::vector<double>& sigma) {
  const std::size_t m = t.u.rows();
  const std::size_t n = t.v.rows();
  std::size_t keep = 0;
  while (keep < sigma.size() && sigma[keep] > 0.0) ++keep;
  if (keep == 0) return DenseMatrix(m, n);
  DenseMatrix us(m, keep);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < keep; ++j) us(i, j) = t.u(i, j) * sigma[j];
  DenseMatrix vt(keep, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < keep; ++j) vt(j, i) = t.v(i, j);
  return matmul(us, vt);
}

}  // namespace

double soft_threshold(double x, double threshold) {
  return sign(x) * std::max(std::abs(x) - threshold, 0.0);
}

DenseMatrix elastic_net_min(double lambda1, double lambda2, const DenseMatrix& grad) {
  if (!(lambda1 > 0.0) || !(lambda2 > 0.0))
    throw std::invalid_argument("elastic_net_min: lambda1, lambda2 must be > 0");
  const double threshold = lambda1 / (2.0 * lambda2);
  DenseMatrix out(grad.rows(), grad.cols());
  auto src = grad.values();
  auto dst = out.values();
  for (std::size_t i = 0; i < src.size(); ++i) dst[i] = soft_threshold(-src[i] / (2.0 * lambda2), threshold);
  return out;
}

LmoResult generalized_lmo(const Regularizer& r, const DenseMatrix& grad, const SvdOptions& svd) {
  return std::visit(
      overloaded{
          [&](const NuclearBall& b) -> LmoResult {
            if (frobenius_norm_sq(grad) == 0.0) return zero_lmo(grad);
            const SingularPair top = top_singular_pair(grad, svd);
            DenseMatrix w(grad.rows(), grad.cols());
            for (std::size_t i = 0; i < grad.rows(); ++i)
              for (std::size_t j = 0; j < grad.cols(); ++j) w(i, j) = -b.tau * top.u[i] * top.v[j];
            return {std::move(w), false};
          },
          [&](const L1Ball& b) -> LmoResult {
            auto g = grad.values();
            std::size_t best = 0;
            for (std::size_t i = 1; i < g.size(); ++i)
              if (std::abs(g[i]) > std::abs(g[best])) best = i;
            if (g[best] == 0.0) return zero_lmo(grad);
            DenseMatrix w(grad.rows(), grad.cols());
            w.values()[best] = -b.s * sign(g[best]);
            return {std::move(w), false};
          },
          [&](const LpBall& b) -> LmoResult {
            const double scale = max_abs(grad);
            if (scale == 0.0) return zero_lmo(grad);
            const double q = b.p / (b.p - 1.0);
            auto g = grad.values();
            std::vector<double> powered(g.size());
            double sum_q = 0.0;
            for (std::size_t i = 0; i < g.size(); ++i) {
              const double ratio = std::abs(g[i]) / scale;
              powered[i] = std::pow(ratio, q - 1.0);
              sum_q += powered[i] * ratio;
            }
            // |g_i|^(q-1) / ||g||_q^(q-1), computed on g / max|g|.
            const double denom = std::pow(sum_q, (q - 1.0) / q);
            std::vector<double> w(g.size());
            for (std::size_t i = 0; i < g.size(); ++i) w[i] = -b.s * sign(g[i]) * powered[i] / denom;
            return {with_values(grad, std::move(w)), false};
          },
          [&](const ElasticNet& e) -> LmoResult { return {elastic_net_min(e.lambda1, e.lambda2, grad), false}; },
      },
      r);
}

std::vector<double> project_l1_ball(std::span<const double> v, double s) {
  if (!(s > 0.0)) throw std::invalid_argument("project_l1_ball: s must be > 0");
  std::vector<double> out(v.begin(), v.end());
  double total = 0.0;
  for (double x : v) total += std::abs(x);
  if (total <= s) return out;

  std::vector<double> mags(v.size());
  std::transform(v.begin(), v.end(), mags.begin(), [](double x) { return std::abs(x); });
  std::sort(mags.begin(), mags.end(), std::greater<>());
  double cumulative = 0.0;
  double theta = 0.0;
  for (std::size_t j = 0; j < mags.size(); ++j) {
    cumulative += mags[j];
    const double candidate = (cumulative - s) / static_cast<double>(j + 1);
    if (mags[j] - candidate > 0.0) theta = candidate;
    else break;
  }
  for (double& x : out) x = soft_threshold(x, theta);
  return out;
}

std::vector<double> project_lp_ball(std::span<const double> v, double p, double s) {
  if (!(p > 1.0 && p <= 2.0)) throw std::invalid_argument("project_lp_ball: p must be in (1, 2]");
  if (!(s > 0.0)) throw std::invalid_argument("project_lp_ball: s must be > 0");
  if (lp_norm(v, p) <= s) return {v.begin(), v.end()};

  // The projection is positively homogeneous; work on v / max|v|.
  double scale = 0.0;
  for (double x : v) scale = std::max(scale, std::abs(x));
  const double radius_p = std::pow(s / scale, p);
  std::vector<double> a(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) a[i] = std::abs(v[i]) / scale;

  // g(lambda) = sum y_i^p - radius^p is decreasing in lambda.
  const auto g = [&](double lambda, double* slope) {
    double sum = 0.0;
    double d = 0.0;
    for (double ai : a) {
      const LpEntry e = lp_entry(ai, lambda, p);
      if (e.y == 0.0) continue;
      const double yp1 = std::pow(e.y, p - 1.0);
      sum += yp1 * e.y;
      d += p * yp1 * e.dy;
    }
    if (slope) *slope = d;
    return sum - radius_p;
  };

  double lo = 0.0;
  double hi = 1.0;
  while (g(hi, nullptr) > 0.0) {
    lo = hi;
    hi *= 2.0;
  }
  double lambda = hi;
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    double slope = 0.0;
    const double gv = g(lambda, &slope);
    if (gv == 0.0) {
      lo = hi = lambda;
      break;
    }
    (gv > 0.0 ? lo : hi) = lambda;
    double next = slope < 0.0 ? lambda - gv / slope : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    lambda = next;
  }

  std::vector<double> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = sign(v[i]) * scale * lp_entry(a[i], hi, p).y;
  const double norm = lp_norm(out, p);
  if (norm > s)
    for (double& x : out) x *= s / norm;
  return out;
}

DenseMatrix prox_nuclear_lowrank(const DenseMatrix& center, double tau, std::size_t r_star, const SvdOptions& svd) {
  if (!(tau > 0.0)) throw std::invalid_argument("prox_nuclear_lowrank: tau must be > 0");
  if (r_star < 1 || r_star > std::min(center.rows(), center.cols()))
    throw std::invalid_argument("prox_nuclear_lowrank: r_star must be in [1, min(m, n)]");
  if (frobenius_norm_sq(center) == 0.0) return DenseMatrix(center.rows(), center.cols());
  const SvdTriple t = truncated_svd(center, r_star, svd);
  return low_rank_from(t, project_l1_ball(t.s, tau));
}

DenseMatrix project_nuclear_ball(const DenseMatrix& center, double tau) {
  if (!(tau > 0.0)) throw std::invalid_argument("project_nuclear_ball: tau must be > 0");
  const SvdTriple t = full_svd(center);
  return low_rank_from(t, project_l1_ball(t.s, tau));
}

DenseMatrix prox_center(const DenseMatrix& z, const DenseMatrix& w, const DenseMatrix& grad, double eta,
                        double beta) {
  if (!(eta * beta > 0.0)) throw std::invalid_argument("prox_center: eta * beta must be > 0");
  DenseMatrix a = z - w;
  const double step = 1.0 / (eta * beta);
  auto av = a.values();
  auto gv = grad.values();
  for (std::size_t i = 0; i < av.size(); ++i) av[i] -= step * gv[i];
  return a;
}

DenseMatrix prox_step(const Regularizer& r, const DenseMatrix& z, const DenseMatrix& w, const DenseMatrix& grad,
                      double eta, double beta, const SvdOptions& svd) {
  const DenseMatrix a = prox_center(z, w, grad, eta, beta);
  return std::visit(
      overloaded{
          [&](const NuclearBall& b) {
            if (!b.rank_cap) return project_nuclear_ball(a, b.tau);
            const std::size_t cap = std::min(*b.rank_cap, std::min(a.rows(), a.cols()));
            return prox_nuclear_lowrank(a, b.tau, cap, svd);
          },
          [&](const L1Ball& b) { return with_values(a, project_l1_ball(a.values(), b.s)); },
          [&](const LpBall& b) { return with_values(a, project_lp_ball(a.values(), b.p, b.s)); },
          [&](const ElasticNet& e) {
            const double c = eta * beta;
            const double denom = 2.0 * e.lambda2 + c;
            DenseMatrix out(a.rows(), a.cols());
            auto src = a.values();
            auto dst = out.values();
            for (std::size_t i = 0; i < src.size(); ++i) dst[i] = soft_threshold(c * src[i] / denom, e.lambda1 / denom);
            return out;
          },
      },
      r);
}

double prox_objective(const Regularizer& r, const DenseMatrix& v, const DenseMatrix& z, const DenseMatrix& w,
                      const DenseMatrix& grad, double eta, double beta) {
  const DenseMatrix gap = v + w - z;
  return regularizer_value(r, v) + inner(v, grad) + 0.5 * eta * beta * frobenius_norm_sq(gap);
}

}  // namespace rmrk
