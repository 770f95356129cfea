#include "rmrk/solvers.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "rmrk/errors.hpp"
#include "rmrk/oracles.hpp"
#include "rmrk/svd.hpp"

namespace rmrk {

namespace {

using Clock = std::chrono::steady_clock;

struct Step {
  DenseMatrix x;
  DenseMatrix y;
  double eta;
};

bool is_elastic_net(const Regularizer& r) { return std::holds_alternative<ElasticNet>(r); }

double penalty(const Regularizer& r, const DenseMatrix& x) {
  return is_elastic_net(r) ? regularizer_value(r, x) : 0.0;
}

// Nuclear-ball LMO from a full SVD, used when subspace iteration stalls.
LmoResult lmo(const Regularizer& r, const DenseMatrix& grad, const SvdOptions& opts) {
  try {
    return generalized_lmo(r, grad, opts);
  } catch (const NonConvergence&) {
    const auto* ball = std::get_if<NuclearBall>(&r);
    if (!ball) throw;
    try {
      const SvdTriple t = full_svd(grad);
      DenseMatrix w(grad.rows(), grad.cols());
      for (std::size_t i = 0; i < grad.rows(); ++i)
        for (std::size_t j = 0; j < grad.cols(); ++j) w(i, j) = -ball->tau * t.u(i, 0) * t.v(j, 0);
      return {std::move(w), false};
    } catch (const DimensionTooLarge& e) {
      throw OracleFailure(std::string("linear minimization oracle: ") + e.what());
    }
  }
}

DenseMatrix capped_projection_full(const DenseMatrix& center, double tau, std::size_t cap) {
  SvdTriple t = full_svd(center);
  std::vector<double> s(t.s.begin(), t.s.begin() + static_cast<long>(std::min(cap, t.s.size())));
  s = project_l1_ball(s, tau);
  DenseMatrix out(center.rows(), center.cols());
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k] == 0.0) continue;
    for (std::size_t i = 0; i < out.rows(); ++i) {
      const double uik = t.u(i, k) * s[k];
      for (std::size_t j = 0; j < out.cols(); ++j) out(i, j) += uik * t.v(j, k);
    }
  }
  return out;
}

DenseMatrix prox(const Regularizer& r, const DenseMatrix& z, const DenseMatrix& w, const DenseMatrix& grad, double eta,
                 double beta, const SvdOptions& opts) {
  try {
    return prox_step(r, z, w, grad, eta, beta, opts);
  } catch (const NonConvergence&) {
    const auto* ball = std::get_if<NuclearBall>(&r);
    if (!ball || !ball->rank_cap) throw;
    try {
      return capped_projection_full(prox_center(z, w, grad, eta, beta), ball->tau, *ball->rank_cap);
    } catch (const DimensionTooLarge& e) {
      throw OracleFailure(std::string("proximal step: ") + e.what());
    }
  }
}

void check_config(const SolverConfig& c) {
  if (c.max_iters < 1) throw std::invalid_argument("max_iters must be >= 1");
  if (c.record_every < 1) throw std::invalid_argument("record_every must be >= 1");
  if (c.time_budget_s && !(*c.time_budget_s > 0.0)) throw std::invalid_argument("time_budget_s must be > 0");
}

std::pair<DenseMatrix, DenseMatrix> start_point(const ProblemSpec& p, const SolverConfig& c) {
  const std::size_t m = p.m_data.rows();
  const std::size_t n = p.m_data.cols();
  DenseMatrix x = c.x_init ? *c.x_init : DenseMatrix(m, n);
  DenseMatrix y = c.y_init ? *c.y_init : DenseMatrix(m, n);
  if (!x.same_shape(p.m_data) || !y.same_shape(p.m_data))
    throw std::invalid_argument("initial point shape does not match M");
  if (!std::isfinite(regularizer_value(p.reg_x, x)) || !std::isfinite(regularizer_value(p.reg_y, y)))
    throw InfeasibleStart("initial point violates a constraint");
  return {std::move(x), std::move(y)};
}

// Shared outer loop. `step(t, x, y)` produces Q_{t+1} from Q_t.
template <class StepFn>
SolveResult drive(const ProblemSpec& problem, const SolverConfig& config, StepFn&& step) {
  validate(problem);
  check_config(config);
  auto [x, y] = start_point(problem, config);
  const auto start = Clock::now();
  const auto elapsed = [&] { return std::chrono::duration<double>(Clock::now() - start).count(); };

  std::vector<IterationRecord> trace;
  const auto record = [&](long t, double when, double f, double eta) {
    IterationRecord rec;
    rec.t = t;
    rec.wall_time_s = when;
    rec.f_value = f;
    rec.eta_used = eta;
    rec.feas_x = feasibility_residual(problem.reg_x, x);
    rec.feas_y = feasibility_residual(problem.reg_y, y);
    rec.rank_x = config.track_rank ? numerical_rank(singular_values(x)) : 0;
    trace.push_back(rec);
    if (config.on_record) config.on_record(rec, x, y);
  };

  double f = penalized_value(problem, x, y);
  for (long t = 1;; ++t) {
    const double now = elapsed();
    const bool last = t >= config.max_iters || (config.f_target && f <= *config.f_target) ||
                      (config.time_budget_s && now >= *config.time_budget_s);
    if (last) {
      record(t, now, f, 0.0);
      break;
    }
    Step next = step(t, x, y);
    if (t == 1 || (t - 1) % config.record_every == 0) record(t, now, f, next.eta);
    x = std::move(next.x);
    y = std::move(next.y);
    f = penalized_value(problem, x, y);
  }
  return {std::move(x), std::move(y), std::move(trace)};
}

double combination_coefficient(const ProblemSpec& p, const SolverConfig& c, long t, const DenseMatrix& x,
                               const DenseMatrix& y, const DenseMatrix& v, const DenseMatrix& w) {
  return c.line_search ? line_search(p, x, y, v, w) : step_size(c.schedule, t);
}

void require_indicators(const ProblemSpec& p, const char* who) {
  if (!is_indicator(p.reg_x) || !is_indicator(p.reg_y))
    throw std::invalid_argument(std::string(who) + ": both regularizers must be ball indicators");
}

}  // namespace

std::string_view algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::AltCgPg: return "alt_cgpg";
    case Algorithm::AltPgCg: return "alt_pgcg";
    case Algorithm::Cgcg: return "cgcg";
    case Algorithm::CgcgP: return "cgcg_p";
    case Algorithm::Fista: return "fista";
  }
  return "unknown";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  for (Algorithm a : {Algorithm::AltCgPg, Algorithm::AltPgCg, Algorithm::Cgcg, Algorithm::CgcgP, Algorithm::Fista})
    if (algorithm_name(a) == name) return a;
  return std::nullopt;
}

double penalized_value(const ProblemSpec& problem, const DenseMatrix& x, const DenseMatrix& y) {
  return loss_value(problem, x + y) + penalty(problem.reg_x, x) + penalty(problem.reg_y, y);
}

DenseMatrix project(const Regularizer& r, const DenseMatrix& a) {
  if (const auto* b = std::get_if<NuclearBall>(&r)) return project_nuclear_ball(a, b->tau);
  if (const auto* b = std::get_if<L1Ball>(&r)) return DenseMatrix(a.rows(), a.cols(), project_l1_ball(a.values(), b->s));
  if (const auto* b = std::get_if<LpBall>(&r))
    return DenseMatrix(a.rows(), a.cols(), project_lp_ball(a.values(), b->p, b->s));
  throw std::invalid_argument("project: the elastic net has no feasible set");
}

double line_search(const ProblemSpec& problem, const DenseMatrix& x, const DenseMatrix& y, const DenseMatrix& v,
                   const DenseMatrix& w) {
  const DenseMatrix resid = x + y - problem.m_data;
  const DenseMatrix dir = (x + y) - (v + w);
  const double dd = frobenius_norm_sq(dir);
  const double rd = inner(resid, dir);
  const double rr = frobenius_norm_sq(resid);

  if (!is_elastic_net(problem.reg_x) && !is_elastic_net(problem.reg_y)) {
    if (dd == 0.0) return 0.0;
    return std::clamp(rd / dd, 0.0, 1.0);
  }

  const auto phi = [&](double eta) {
    const double loss = 0.5 * (rr - 2.0 * eta * rd + eta * eta * dd);
    double pen = 0.0;
    if (is_elastic_net(problem.reg_x)) pen += regularizer_value(problem.reg_x, convex_combination(x, v, eta));
    if (is_elastic_net(problem.reg_y)) pen += regularizer_value(problem.reg_y, convex_combination(y, w, eta));
    return loss + pen;
  };
  const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = 0.0;
  double b = 1.0;
  double c = b - ratio * (b - a);
  double d = a + ratio * (b - a);
  double fc = phi(c);
  double fd = phi(d);
  while (b - a > 1e-10) {
    if (fc <= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - ratio * (b - a);
      fc = phi(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + ratio * (b - a);
      fd = phi(d);
    }
  }
  double best = 0.5 * (a + b);
  double f_best = phi(best);
  for (double end : {0.0, 1.0}) {
    const double fe = phi(end);
    if (fe < f_best) {
      best = end;
      f_best = fe;
    }
  }
  return best;
}

SolveResult solve_alternating(const ProblemSpec& problem, const SolverConfig& config) {
  if (config.algorithm != Algorithm::AltCgPg && config.algorithm != Algorithm::AltPgCg)
    throw std::invalid_argument("solve_alternating: algorithm must be alt_cgpg or alt_pgcg");
  const bool prox_on_x = config.algorithm == Algorithm::AltCgPg;
  const Regularizer& cg_reg = prox_on_x ? problem.reg_y : problem.reg_x;
  const Regularizer& prox_reg = prox_on_x ? problem.reg_x : problem.reg_y;
  SubspaceCache lmo_cache;
  SubspaceCache prox_cache;
  const SvdOptions lmo_opts{.tol = config.svd_tol, .max_iter = config.svd_max_iter, .seed = config.seed, .cache = &lmo_cache};
  const SvdOptions prox_opts{.tol = config.svd_tol, .max_iter = config.svd_max_iter, .seed = config.seed + 1, .cache = &prox_cache};

  return drive(problem, config, [&](long t, const DenseMatrix& x, const DenseMatrix& y) {
    const DenseMatrix z = x + y;
    const DenseMatrix grad = loss_gradient(problem, z);
    const DenseMatrix w = lmo(cg_reg, grad, lmo_opts).w;
    const DenseMatrix v = prox(prox_reg, z, w, grad, step_size(config.schedule, t), problem.beta, prox_opts);
    const DenseMatrix& tx = prox_on_x ? v : w;
    const DenseMatrix& ty = prox_on_x ? w : v;
    const double eta = combination_coefficient(problem, config, t, x, y, tx, ty);
    return Step{convex_combination(x, tx, eta), convex_combination(y, ty, eta), eta};
  });
}

namespace {

Step cgcg_step(const ProblemSpec& problem, const SolverConfig& config, long t, const DenseMatrix& x,
               const DenseMatrix& y, const SvdOptions& x_opts, const SvdOptions& y_opts) {
  const DenseMatrix grad = loss_gradient(problem, x + y);
  const DenseMatrix v = lmo(problem.reg_x, grad, x_opts).w;
  const DenseMatrix w = lmo(problem.reg_y, grad, y_opts).w;
  const double eta = combination_coefficient(problem, config, t, x, y, v, w);
  return Step{convex_combination(x, v, eta), convex_combination(y, w, eta), eta};
}

}  // namespace

SolveResult solve_cgcg(const ProblemSpec& problem, const SolverConfig& config) {
  require_indicators(problem, "solve_cgcg");
  SubspaceCache x_cache;
  SubspaceCache y_cache;
  const SvdOptions x_opts{.tol = config.svd_tol, .max_iter = config.svd_max_iter, .seed = config.seed, .cache = &x_cache};
  const SvdOptions y_opts{.tol = config.svd_tol, .max_iter = config.svd_max_iter, .seed = config.seed + 1, .cache = &y_cache};
  return drive(problem, config, [&](long t, const DenseMatrix& x, const DenseMatrix& y) {
    return cgcg_step(problem, config, t, x, y, x_opts, y_opts);
  });
}

SolveResult solve_cgcg_p(const ProblemSpec& problem, const SolverConfig& config) {
  require_indicators(problem, "solve_cgcg_p");
  if (!std::holds_alternative<L1Ball>(problem.reg_y) && !std::holds_alternative<LpBall>(problem.reg_y))
    throw std::invalid_argument("solve_cgcg_p: R_Y must be an l1 or lp ball");
  SubspaceCache x_cache;
  SubspaceCache y_cache;
  const SvdOptions x_opts{.tol = config.svd_tol, .max_iter = config.svd_max_iter, .seed = config.seed, .cache = &x_cache};
  const SvdOptions y_opts{.tol = config.svd_tol, .max_iter = config.svd_max_iter, .seed = config.seed + 1, .cache = &y_cache};
  return drive(problem, config, [&](long t, const DenseMatrix& x, const DenseMatrix& y) {
    Step s = cgcg_step(problem, config, t, x, y, x_opts, y_opts);
    const DenseMatrix grad = loss_gradient(problem, s.x + s.y);
    DenseMatrix moved = s.y;
    auto mv = moved.values();
    auto gv = grad.values();
    for (std::size_t i = 0; i < mv.size(); ++i) mv[i] -= gv[i] / problem.beta;
    DenseMatrix projected = project(problem.reg_y, moved);
    if (config.on_projection)
      config.on_projection(t, penalized_value(problem, s.x, s.y), penalized_value(problem, s.x, projected));
    s.y = std::move(projected);
    return s;
  });
}

SolveResult solve_fista(const ProblemSpec& problem, const SolverConfig& config) {
  require_indicators(problem, "solve_fista");
  if (std::min(problem.m_data.rows(), problem.m_data.cols()) > kFullSvdMaxDim)
    throw DimensionTooLarge("solve_fista: a full SVD per iteration needs min(m, n) <= " +
                            std::to_string(kFullSvdMaxDim));
  constexpr double kLipschitz = 2.0;
  std::optional<DenseMatrix> xa;
  std::optional<DenseMatrix> ya;
  double tk = 1.0;
  return drive(problem, config, [&](long, const DenseMatrix& x, const DenseMatrix& y) {
    if (!xa) {
      xa = x;
      ya = y;
    }
    const DenseMatrix grad = loss_gradient(problem, *xa + *ya);
    const DenseMatrix xn = project(problem.reg_x, *xa - (1.0 / kLipschitz) * grad);
    const DenseMatrix yn = project(problem.reg_y, *ya - (1.0 / kLipschitz) * grad);
    const double tn = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * tk * tk));
    const double momentum = (tk - 1.0) / tn;
    *xa = xn + momentum * (xn - x);
    *ya = yn + momentum * (yn - y);
    tk = tn;
    return Step{xn, yn, 1.0 / kLipschitz};
  });
}

SolveResult solve(const ProblemSpec& problem, const SolverConfig& config) {
  switch (config.algorithm) {
    case Algorithm::AltCgPg:
    case Algorithm::AltPgCg: return solve_alternating(problem, config);
    case Algorithm::Cgcg: return solve_cgcg(problem, config);
    case Algorithm::CgcgP: return solve_cgcg_p(problem, config);
    case Algorithm::Fista: return solve_fista(problem, config);
  }
  throw std::invalid_argument("solve: unknown algorithm");
}

}  // namespace rmrk
