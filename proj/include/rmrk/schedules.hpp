#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "rmrk/matrix.hpp"
#include "rmrk/problem.hpp"
#include "rmrk/svd.hpp"

namespace rmrk {

/// eta_t = alpha / (2 beta) for t <= t0, then 2 / (t - t0 + 4 beta / alpha).
struct MinDiamTwoPhase {
  double alpha = 1.0;
  double beta = 1.0;
  long t0 = 0;
};

/// eta_t = 1 / (t - 1 + 6 beta / alpha).
struct StrongSetDecaying {
  double alpha = 1.0;
  double beta = 1.0;
};

struct FixedStep {
  double eta = 0.5;
};

/// eta_t = 2 / (t + 1); the practical prox step used with line search.
struct OpenLoop {};

using StepSchedule = std::variant<MinDiamTwoPhase, StrongSetDecaying, FixedStep, OpenLoop>;

/// eta_t for t >= 1, clamped to (0, 1].
double step_size(const StepSchedule& schedule, long t);

/// Computable upper bound on f(x1, y1) - f* from one LMO call per block at
/// (x1, y1). Throws InfeasibleStart when an indicator is violated there.
double gap_bound_C(const ProblemSpec& problem, const DenseMatrix& x1, const DenseMatrix& y1,
                   const SvdOptions& svd = {});

/// t0 = max{0, ceil(2 beta / alpha * ln(2 C / (alpha D_Y^2)))}.
long min_diam_t0(double alpha, double beta, double c, double d_y);

/// Throws InvalidConstants unless 0 < alpha <= beta and C, D_Y > 0.
StepSchedule make_min_diam_schedule(double alpha, double beta, double c, double d_y);
StepSchedule make_strong_set_schedule(double alpha, double beta);
/// min{alpha / (2 beta), gamma G / (8 beta)}, clamped to <= 1.
StepSchedule fixed_step_strong_set(double alpha, double beta, double gamma, double g_lower);
/// min{alpha, delta} / (2 beta).
StepSchedule fixed_step_strong_reg(double alpha, double delta, double beta);

/// (delta + 2 alpha - sqrt(delta^2 + 4 alpha^2)) / 2, evaluated in a
/// cancellation-free form. Always strictly between 0 and min(alpha, delta).
double composed_strong_convexity(double alpha, double delta);

/// Euclidean set-strong-convexity constant of the lp ball of radius s in
/// dimension n_entries: (p - 1) / s * n_entries^(1/2 - 1/p).
double lp_ball_strong_convexity(double p, double s, std::uint64_t n_entries);

// Closed-form rate bounds.
double min_diam_bound(double alpha, double beta, double d_y, long t0, long t);
double strong_set_bound(double alpha, double beta, double gamma, double h1, long t);
double linear_rate_bound(double h1, double eta, long t);

/// Worst-case trajectory of a recursion lemma against its closed-form bound.
struct RecursionReport {
  long horizon = 0;
  double max_violation = 0.0;  // max over t of sequence - bound
  std::vector<double> bound_values;
  std::vector<double> sequence_values;
};

/// h_{t+1} = (1 - eta_t) h_t + eta_t^2 beta D_Y^2 with the two-phase step.
/// Bound: 4 beta D_Y^2 / (t - t0 - 1 + 4 beta / alpha) for t > t0 and C
/// during the constant phase (h_t <= max{h_1, alpha D_Y^2 / 2} <= C there).
struct MinDiamRecursion {
  double alpha = 1.0;
  double beta = 1.0;
  double d_y = 1.0;
  double c = 1.0;   // C >= h1
  double h1 = 1.0;
};

/// h_{t+1} = (1 - e_t) h_t with e_t = min{3 / (t - 1 + 3 / c2), c1 sqrt(h_t), c2},
/// the largest decrease the lemma's hypothesis guarantees at each step.
/// Bound: 9 max{c1^-2, c2^-2 h1} / (t - 1 + 3 / c2)^2.
struct StrongSetRecursion {
  double c1 = 1.0;
  double c2 = 1.0;  // in (0, 1]
  double h1 = 1.0;
};

RecursionReport simulate_recursion(const MinDiamRecursion& constants, long horizon);
RecursionReport simulate_recursion(const StrongSetRecursion& constants, long horizon);

}  // namespace rmrk
