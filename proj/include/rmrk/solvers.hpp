#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rmrk/matrix.hpp"
#include "rmrk/problem.hpp"
#include "rmrk/schedules.hpp"

namespace rmrk {

/// AltCgPg: conditional gradient on Y, proximal step on X.
/// AltPgCg: the roles reversed.
/// Cgcg: conditional gradient on both blocks.
/// CgcgP: Cgcg followed by a projected-gradient step on Y.
/// Fista: accelerated projected gradient on the product of the two balls.
enum class Algorithm { AltCgPg, AltPgCg, Cgcg, CgcgP, Fista };

std::string_view algorithm_name(Algorithm a);
std::optional<Algorithm> parse_algorithm(std::string_view name);

struct IterationRecord {
  long t = 0;
  double wall_time_s = 0.0;
  double f_value = 0.0;
  double eta_used = 0.0;  // coefficient taking Q_t to Q_{t+1}; 0 on the final row
  double feas_x = 0.0;
  double feas_y = 0.0;
  std::size_t rank_x = 0;
};

struct SolverConfig {
  Algorithm algorithm = Algorithm::AltCgPg;
  StepSchedule schedule = OpenLoop{};
  // Combination coefficient from line search; the prox step keeps the
  // schedule's eta_t.
  bool line_search = false;
  long max_iters = 100;  // number of iterates Q_1..Q_max_iters
  std::optional<double> f_target;
  std::optional<double> time_budget_s;
  std::uint64_t seed = 0;
  long record_every = 1;
  // Truncated SVD inside the oracles.
  double svd_tol = 1e-9;
  int svd_max_iter = 300;
  // Rank of the recorded X costs a singular value sweep per row.
  bool track_rank = true;

  std::optional<DenseMatrix> x_init;
  std::optional<DenseMatrix> y_init;

  // Called for every recorded row with the iterate it describes.
  std::function<void(const IterationRecord&, const DenseMatrix& x, const DenseMatrix& y)> on_record;
  // CgcgP only: objective before and after the projected-gradient step on Y.
  std::function<void(long t, double f_before, double f_after)> on_projection;
};

struct SolveResult {
  DenseMatrix x;
  DenseMatrix y;
  std::vector<IterationRecord> trace;
};

/// Rows are written for t = 1 and every t with (t - 1) % record_every == 0,
/// and always for the last iterate. Runs stop after max_iters iterates, once
/// f <= f_target, or when the time budget is spent.
SolveResult solve_alternating(const ProblemSpec& problem, const SolverConfig& config);
SolveResult solve_cgcg(const ProblemSpec& problem, const SolverConfig& config);
SolveResult solve_cgcg_p(const ProblemSpec& problem, const SolverConfig& config);
SolveResult solve_fista(const ProblemSpec& problem, const SolverConfig& config);
SolveResult solve(const ProblemSpec& problem, const SolverConfig& config);

/// Best coefficient in [0, 1] for (1 - eta) (x, y) + eta (v, w).
/// Closed form when neither block is an elastic net (indicator terms are 0
/// along the segment); otherwise golden-section search to 1e-10.
double line_search(const ProblemSpec& problem, const DenseMatrix& x, const DenseMatrix& y, const DenseMatrix& v,
                   const DenseMatrix& w);

/// Loss plus penalty terms, indicators omitted. Equals objective() on
/// feasible points and stays finite on rounding-level violations.
double penalized_value(const ProblemSpec& problem, const DenseMatrix& x, const DenseMatrix& y);

/// Euclidean projection onto a ball regularizer's feasible set (full SVD for
/// the nuclear ball). Throws std::invalid_argument for the elastic net.
DenseMatrix project(const Regularizer& r, const DenseMatrix& a);

}  // namespace rmrk
