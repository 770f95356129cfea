#include "rmrk/schedules.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "rmrk/errors.hpp"
#include "rmrk/oracles.hpp"

namespace rmrk {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

bool positive(double v) { return std::isfinite(v) && v > 0.0; }

void require_alpha_beta(double alpha, double beta) {
  if (!positive(alpha) || !positive(beta)) throw InvalidConstants("alpha and beta must be > 0");
  if (alpha > beta) throw InvalidConstants("alpha must not exceed beta");
}

double clamp_step(double eta) { return std::min(eta, 1.0); }

}  // namespace

double step_size(const StepSchedule& schedule, long t) {
  if (t < 1) throw std::invalid_argument("step_size: t must be >= 1");
  const double td = static_cast<double>(t);
  const double eta = std::visit(
      overloaded{
          [&](const MinDiamTwoPhase& s) {
            if (t <= s.t0) return s.alpha / (2.0 * s.beta);
            return 2.0 / (td - static_cast<double>(s.t0) + 4.0 * s.beta / s.alpha);
          },
          [&](const StrongSetDecaying& s) { return 1.0 / (td - 1.0 + 6.0 * s.beta / s.alpha); },
          [&](const FixedStep& s) { return s.eta; },
          [&](const OpenLoop&) { return 2.0 / (td + 1.0); },
      },
      schedule);
  return clamp_step(eta);
}

double gap_bound_C(const ProblemSpec& problem, const DenseMatrix& x1, const DenseMatrix& y1, const SvdOptions& svd) {
  const double rx = regularizer_value(problem.reg_x, x1);
  const double ry = regularizer_value(problem.reg_y, y1);
  if (!std::isfinite(rx) || !std::isfinite(ry)) throw InfeasibleStart("gap_bound_C: starting point is infeasible");
  const DenseMatrix z = x1 + y1;
  const DenseMatrix grad = loss_gradient(problem, z);
  const DenseMatrix w1 = generalized_lmo(problem.reg_y, grad, svd).w;
  const DenseMatrix v1 = generalized_lmo(problem.reg_x, grad, svd).w;
  const double c = inner(z - (w1 + v1), grad) + ry + rx - regularizer_value(problem.reg_y, w1) -
                   regularizer_value(problem.reg_x, v1);
  return std::max(c, 0.0);
}

long min_diam_t0(double alpha, double beta, double c, double d_y) {
  const double arg = 2.0 * c / (alpha * d_y * d_y);
  if (arg <= 1.0) return 0;
  return std::max(0L, static_cast<long>(std::ceil(2.0 * beta / alpha * std::log(arg))));
}

StepSchedule make_min_diam_schedule(double alpha, double beta, double c, double d_y) {
  require_alpha_beta(alpha, beta);
  if (!positive(c) || !positive(d_y)) throw InvalidConstants("C and D_Y must be > 0");
  return MinDiamTwoPhase{alpha, beta, min_diam_t0(alpha, beta, c, d_y)};
}

StepSchedule make_strong_set_schedule(double alpha, double beta) {
  require_alpha_beta(alpha, beta);
  return StrongSetDecaying{alpha, beta};
}

StepSchedule fixed_step_strong_set(double alpha, double beta, double gamma, double g_lower) {
  if (!positive(alpha) || !positive(beta) || !positive(gamma) || !positive(g_lower))
    throw InvalidConstants("fixed_step_strong_set: constants must be > 0");
  return FixedStep{clamp_step(std::min(alpha / (2.0 * beta), gamma * g_lower / (8.0 * beta)))};
}

StepSchedule fixed_step_strong_reg(double alpha, double delta, double beta) {
  if (!positive(alpha) || !positive(delta) || !positive(beta))
    throw InvalidConstants("fixed_step_strong_reg: constants must be > 0");
  return FixedStep{clamp_step(std::min(alpha, delta) / (2.0 * beta))};
}

double composed_strong_convexity(double alpha, double delta) {
  if (!positive(alpha) || !positive(delta)) throw InvalidConstants("alpha and delta must be > 0");
  // Rationalized form of (delta + 2 alpha - sqrt(delta^2 + 4 alpha^2)) / 2.
  return 2.0 * alpha * delta / (delta + 2.0 * alpha + std::hypot(delta, 2.0 * alpha));
}

double lp_ball_strong_convexity(double p, double s, std::uint64_t n_entries) {
  if (!(p > 1.0 && p <= 2.0) || !positive(s) || n_entries < 1)
    throw InvalidConstants("lp_ball_strong_convexity: need p in (1, 2], s > 0, N >= 1");
  return (p - 1.0) / s * std::pow(static_cast<double>(n_entries), 0.5 - 1.0 / p);
}

double min_diam_bound(double alpha, double beta, double d_y, long t0, long t) {
  return 4.0 * beta * d_y * d_y / (static_cast<double>(t - t0 - 1) + 4.0 * beta / alpha);
}

double strong_set_bound(double alpha, double beta, double gamma, double h1, long t) {
  const double lead = std::max(128.0 * beta * beta / (alpha * gamma * gamma), 4.0 * beta * beta / (alpha * alpha) * h1);
  const double denom = static_cast<double>(t - 1) + 6.0 * beta / alpha;
  return 9.0 * lead / (denom * denom);
}

double linear_rate_bound(double h1, double eta, long t) {
  return h1 * std::exp(-eta * static_cast<double>(t - 1));
}

RecursionReport simulate_recursion(const MinDiamRecursion& k, long horizon) {
  if (horizon < 1) throw InvalidConstants("simulate_recursion: horizon must be >= 1");
  require_alpha_beta(k.alpha, k.beta);
  if (!positive(k.d_y) || !positive(k.c) || !(k.h1 >= 0.0) || k.h1 > k.c)
    throw InvalidConstants("simulate_recursion: need D_Y > 0 and 0 <= h1 <= C");
  const StepSchedule schedule = make_min_diam_schedule(k.alpha, k.beta, k.c, k.d_y);
  const long t0 = std::get<MinDiamTwoPhase>(schedule).t0;
  const double noise = k.beta * k.d_y * k.d_y;

  RecursionReport report;
  report.horizon = horizon;
  report.max_violation = -std::numeric_limits<double>::infinity();
  double h = k.h1;
  for (long t = 1; t <= horizon; ++t) {
    const double bound = t <= t0 ? k.c : min_diam_bound(k.alpha, k.beta, k.d_y, t0, t);
    report.sequence_values.push_back(h);
    report.bound_values.push_back(bound);
    report.max_violation = std::max(report.max_violation, h - bound);
    const double eta = step_size(schedule, t);
    h = (1.0 - eta) * h + eta * eta * noise;
  }
  return report;
}

RecursionReport simulate_recursion(const StrongSetRecursion& k, long horizon) {
  if (horizon < 1) throw InvalidConstants("simulate_recursion: horizon must be >= 1");
  if (!positive(k.c1) || !positive(k.c2) || k.c2 > 1.0 || !(k.h1 >= 0.0))
    throw InvalidConstants("simulate_recursion: need c1 > 0, 0 < c2 <= 1, h1 >= 0");
  const double offset = 3.0 / k.c2;
  const double lead = 9.0 * std::max(1.0 / (k.c1 * k.c1), k.h1 / (k.c2 * k.c2));

  RecursionReport report;
  report.horizon = horizon;
  report.max_violation = -std::numeric_limits<double>::infinity();
  double h = k.h1;
  for (long t = 1; t <= horizon; ++t) {
    const double denom = static_cast<double>(t - 1) + offset;
    const double bound = lead / (denom * denom);
    report.sequence_values.push_back(h);
    report.bound_values.push_back(bound);
    report.max_violation = std::max(report.max_violation, h - bound);
    const double prescribed = 3.0 / denom;
    const double step = std::min({prescribed, k.c1 * std::sqrt(h), k.c2});
    h -= step * h;
  }
  return report;
}

}  // namespace rmrk
