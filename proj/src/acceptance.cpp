#include "rmrk/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "rmrk/config.hpp"
#include "rmrk/datagen.hpp"
#include "rmrk/errors.hpp"
#include "rmrk/oracles.hpp"
#include "rmrk/rng.hpp"
#include "rmrk/runner.hpp"
#include "rmrk/schedules.hpp"
#include "rmrk/solvers.hpp"

namespace rmrk {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

double uniform(Rng& rng, double lo, double hi) { return lo + (hi - lo) * rng.uniform(); }

std::size_t uniform_dim(Rng& rng, std::size_t max_dim) {
  return 1 + static_cast<std::size_t>(rng.uniform() * static_cast<double>(max_dim));
}

DenseMatrix gaussian(Rng& rng, std::size_t m, std::size_t n) {
  DenseMatrix a(m, n);
  for (double& v : a.values()) v = rng.normal();
  return a;
}

// Closes a criterion: stamps the runtime and fails it when over budget.
CriterionResult finish(int id, std::string name, bool ok, std::string detail, Clock::time_point start,
                       double budget_s) {
  CriterionResult r{id, std::move(name), ok, std::move(detail), seconds_since(start)};
  if (budget_s > 0.0 && r.seconds >= budget_s) {
    r.passed = false;
    r.detail += "; runtime " + sci(r.seconds) + " s over the " + sci(budget_s) + " s budget";
  }
  return r;
}

// Projection onto the l1 ball through its penalty form: the minimizer of
// 1/2 ||x - v||^2 + theta ||x||_1 is soft thresholding, and the multiplier
// theta solving ||S_theta(v)||_1 = s is found by bisection.
std::vector<double> l1_penalty_oracle(const std::vector<double>& v, double s) {
  const auto shrink = [&](double theta) {
    std::vector<double> x(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
      x[i] = std::copysign(std::max(std::abs(v[i]) - theta, 0.0), v[i]);
    return x;
  };
  const auto norm1 = [](const std::vector<double>& x) {
    double acc = 0.0;
    for (double e : x) acc += std::abs(e);
    return acc;
  };
  if (norm1(v) <= s) return v;
  double lo = 0.0;
  double hi = 0.0;
  for (double e : v) hi = std::max(hi, std::abs(e));
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (norm1(shrink(mid)) > s ? lo : hi) = mid;
  }
  return shrink(hi);
}

// Brute-force scalar minimizer of lambda1 |w| + lambda2 w^2 + g w on a grid.
double elastic_net_grid(double lambda1, double lambda2, double g) {
  constexpr double kStep = 1e-4;
  double best_w = 0.0;
  double best = std::numeric_limits<double>::infinity();
  for (long k = -50000; k <= 50000; ++k) {
    const double w = static_cast<double>(k) * kStep;
    const double val = lambda1 * std::abs(w) + lambda2 * w * w + g * w;
    if (val < best) {
      best = val;
      best_w = w;
    }
  }
  return best_w;
}

CriterionResult criterion_oracles() {
  const auto start = Clock::now();
  Rng rng(101);
  double nuc_err = 0.0;
  double l1_err = 0.0;
  double en_err = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    {
      const std::size_t m = uniform_dim(rng, 10);
      const std::size_t n = uniform_dim(rng, 10);
      const DenseMatrix a = gaussian(rng, m, n);
      const double tau = uniform(rng, 0.05, 1.5) * nuclear_norm(a);
      const DenseMatrix low = prox_nuclear_lowrank(a, tau, std::min(m, n), SvdOptions{.tol = 1e-13, .max_iter = 2000});
      const DenseMatrix full = project_nuclear_ball(a, tau);
      nuc_err = std::max(nuc_err, frobenius_norm(low - full));
    }
    {
      const std::size_t m = uniform_dim(rng, 5);
      const std::size_t n = uniform_dim(rng, 5);
      const DenseMatrix a = gaussian(rng, m, n);
      const double s = uniform(rng, 0.05, 1.5) * l1_norm(a);
      const std::vector<double> v(a.values().begin(), a.values().end());
      const std::vector<double> got = project_l1_ball(v, s);
      const std::vector<double> want = l1_penalty_oracle(v, s);
      double d = 0.0;
      for (std::size_t i = 0; i < v.size(); ++i) d += (got[i] - want[i]) * (got[i] - want[i]);
      l1_err = std::max(l1_err, std::sqrt(d));
    }
    {
      const std::size_t m = uniform_dim(rng, 5);
      const std::size_t n = uniform_dim(rng, 5);
      DenseMatrix g(m, n);
      for (double& e : g.values()) e = uniform(rng, -3.0, 3.0);
      const double lambda1 = uniform(rng, 0.0, 1.0);
      const double lambda2 = uniform(rng, 0.5, 2.0);
      const DenseMatrix w = elastic_net_min(lambda1, lambda2, g);
      for (std::size_t i = 0; i < g.size(); ++i)
        en_err = std::max(en_err, std::abs(w.values()[i] - elastic_net_grid(lambda1, lambda2, g.values()[i])));
    }
  }
  const bool ok = nuc_err <= 1e-8 && l1_err <= 1e-6 && en_err <= 1e-4;
  return finish(1, "oracle equivalence", ok,
                "nuclear prox vs full projection " + sci(nuc_err) + " (<= 1e-8), l1 vs penalty oracle " + sci(l1_err) +
                    " (<= 1e-6), elastic net vs grid " + sci(en_err) + " (<= 1e-4)",
                start, 30.0);
}

// Criteria 2 and 3 share five AltCgPg runs with the two-phase schedule.
std::vector<CriterionResult> criteria_min_diam() {
  const auto start = Clock::now();
  double worst_bound = -std::numeric_limits<double>::infinity();
  double worst_recursion = -std::numeric_limits<double>::infinity();
  long bound_checks = 0;
  long recursion_checks = 0;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    InstanceSpec spec;
    spec.kind = InstanceKind::KnownOptimum;
    spec.m = spec.n = 50;
    spec.r = 3;
    spec.p = 0.05;
    spec.seed = seed;
    const Instance inst = generate(spec);
    const ProblemSpec problem{inst.m_data, nuclear_ball(inst.tau), l1_ball(inst.s_bound)};
    const DenseMatrix zero(spec.m, spec.n);
    const double c = gap_bound_C(problem, zero, zero);
    const double d_y = *euclidean_diameter(problem.reg_y);
    SolverConfig config;
    config.schedule = make_min_diam_schedule(problem.alpha, problem.beta, c, d_y);
    config.max_iters = 2000;
    config.track_rank = false;
    config.seed = seed;
    const long t0 = std::get<MinDiamTwoPhase>(config.schedule).t0;
    const std::vector<IterationRecord> trace = solve(problem, config).trace;
    const double f_star = *inst.f_star;
    for (std::size_t i = 0; i < trace.size(); ++i) {
      const IterationRecord& r = trace[i];
      const double h = r.f_value - f_star;
      if (r.t > t0) {
        const double bound = min_diam_bound(problem.alpha, problem.beta, d_y, t0, r.t);
        worst_bound = std::max(worst_bound, (h - bound) / bound);
        ++bound_checks;
      }
      if (i + 1 < trace.size()) {
        const double eta = r.eta_used;
        const double rhs = (1.0 - eta) * h + eta * eta * problem.beta * d_y * d_y;
        worst_recursion = std::max(worst_recursion, (trace[i + 1].f_value - f_star - rhs) / rhs);
        ++recursion_checks;
      }
    }
  }
  const bool ok2 = bound_checks > 0 && worst_bound <= 1e-6;
  const bool ok3 = recursion_checks > 0 && worst_recursion <= 1e-9;
  std::vector<CriterionResult> out;
  out.push_back(finish(2, "min-diameter rate bound", ok2,
                       "max relative excess over the bound " + sci(worst_bound) + " (<= 1e-6) across " +
                           std::to_string(bound_checks) + " iterates",
                       start, 120.0));
  out.push_back(finish(3, "per-iteration recursion", ok3,
                       "max relative excess " + sci(worst_recursion) + " (<= 1e-9) across " +
                           std::to_string(recursion_checks) + " steps",
                       start, 120.0));
  return out;
}

CriterionResult criterion_strong_set() {
  const auto start = Clock::now();
  InstanceSpec spec;
  spec.kind = InstanceKind::KnownOptimum;
  spec.m = spec.n = 50;
  spec.r = 3;
  spec.p = 0.05;
  spec.seed = 7;
  const Instance inst = generate(spec);
  const double p = 1.2;
  const double s = lp_norm(inst.s_true, p);
  const ProblemSpec problem{inst.m_data, nuclear_ball(inst.tau), lp_ball(p, s)};
  const double gamma = lp_ball_strong_convexity(p, s, spec.m * spec.n);
  SolverConfig config;
  config.schedule = make_strong_set_schedule(problem.alpha, problem.beta);
  config.max_iters = 2000;
  config.track_rank = false;
  const std::vector<IterationRecord> trace = solve(problem, config).trace;
  const double h1 = trace.front().f_value;
  double worst = -std::numeric_limits<double>::infinity();
  for (const IterationRecord& r : trace) {
    const double bound = strong_set_bound(problem.alpha, problem.beta, gamma, h1, r.t);
    worst = std::max(worst, (r.f_value - bound) / bound);
  }
  return finish(4, "strongly convex set O(1/t^2) bound", worst <= 0.0,
                "gamma " + sci(gamma) + ", final h " + sci(trace.back().f_value) + ", max relative excess " +
                    sci(worst) + " (<= 0) over " + std::to_string(trace.size()) + " iterates",
                start, 120.0);
}

CriterionResult criterion_linear_rate() {
  const auto start = Clock::now();
  InstanceSpec spec;
  spec.kind = InstanceKind::KnownOptimum;
  spec.m = spec.n = 20;
  spec.r = 3;
  spec.p = 0.05;
  spec.seed = 7;
  const Instance inst = generate(spec);
  const double lambda1 = 0.1;
  const double lambda2 = 0.5;
  const ProblemSpec problem{inst.m_data, nuclear_ball(inst.tau), elastic_net(lambda1, lambda2)};
  const double delta = *strong_convexity_modulus(problem.reg_y);
  SolverConfig config;
  config.schedule = fixed_step_strong_reg(problem.alpha, delta, problem.beta);
  config.max_iters = 100000;
  config.track_rank = false;
  const double eta = step_size(config.schedule, 1);
  // One deterministic run is both the reference and the measured trajectory.
  const std::vector<IterationRecord> trace = solve(problem, config).trace;
  double f_star = std::numeric_limits<double>::infinity();
  for (const IterationRecord& r : trace) f_star = std::min(f_star, r.f_value);
  const double h1 = trace.front().f_value - f_star;
  long violations = 0;
  long first_violation = 0;
  double h_at_first = 0.0;
  for (const IterationRecord& r : trace) {
    if (r.t > 500) break;
    const double h = r.f_value - f_star;
    const double bound = linear_rate_bound(h1, eta, r.t) * (1.0 + 1e-6);
    if (h > bound) {
      if (violations++ == 0) {
        first_violation = r.t;
        h_at_first = h;
      }
    }
  }
  std::string detail = "eta " + sci(eta) + ", f* " + sci(f_star) + ", h1 " + sci(h1) + ", " +
                       std::to_string(violations) + " iterates above the bound for t <= 500";
  if (violations > 0)
    detail += " (first t=" + std::to_string(first_violation) + " with h " + sci(h_at_first) + ", bound " +
              sci(linear_rate_bound(h1, eta, first_violation)) + ", spacing of doubles at f* " +
              sci(std::nextafter(f_star, std::numeric_limits<double>::infinity()) - f_star) + ")";
  return finish(5, "linear rate under the elastic net", violations == 0, detail, start, 120.0);
}

struct Table2Errors {
  double x = 0.0;
  double y = 0.0;
};

// AltCgPg with the rank cap at the true rank and line search, then a short
// accelerated projected-gradient refinement started from its output.
Table2Errors table2_repeat(double delta, std::uint64_t seed) {
  std::ostringstream text;
  text << "[instance]\nkind = table2\nm = 100\nn = 100\nr = 10\np = 0.1\ndelta = " << delta << "\nseed = " << seed
       << "\n[solver]\nalgorithm = alt_cgpg\nline_search = true\nmax_iters = 1000\nrecord_every = 1000\n"
          "svd_tol = 1e-5\nrefine_iters = 150\nf_target = 1e-20\n[problem]\nrank_cap = 10\n";
  const RepeatResult rep = run_repeat(parse_run_config(text.str()), seed);
  return {rep.rel_err_x.back(), rep.rel_err_y.back()};
}

CriterionResult criterion_table2() {
  const auto start = Clock::now();
  struct Row {
    double delta;
    double ref_x;
    double ref_y;
    double max_x;
    double max_y;
  };
  const Row rows[] = {{0.05, 9.2e-5, 1.5e-6, 1e-3, 1e-4}, {0.2, 4.3e-2, 4.2e-4, 1e-1, 5e-3}};
  bool ok = true;
  std::ostringstream detail;
  for (const Row& row : rows) {
    std::vector<double> ex;
    std::vector<double> ey;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      const Table2Errors e = table2_repeat(row.delta, seed);
      ex.push_back(e.x);
      ey.push_back(e.y);
    }
    const double mx = median(ex);
    const double my = median(ey);
    ok = ok && mx <= row.max_x && my <= row.max_y;
    if (row.delta != rows[0].delta) detail << "; ";
    detail << "delta=" << row.delta << ": X error " << sci(mx) << " (reference " << sci(row.ref_x)
           << ", threshold " << sci(row.max_x) << "), Y error " << sci(my) << " (reference " << sci(row.ref_y)
           << ", threshold " << sci(row.max_y) << ")";
  }
  return finish(6, "l_{1+delta} recovery table", ok, detail.str(), start, 600.0);
}

CriterionResult criterion_lemmas() {
  const auto start = Clock::now();
  Rng rng(707);
  double worst_min_diam = -std::numeric_limits<double>::infinity();
  double worst_strong_set = -std::numeric_limits<double>::infinity();
  for (int draw = 0; draw < 50; ++draw) {
    MinDiamRecursion md;
    md.beta = uniform(rng, 0.5, 5.0);
    md.alpha = md.beta * uniform(rng, 0.05, 1.0);
    md.d_y = uniform(rng, 0.1, 10.0);
    md.h1 = uniform(rng, 0.0, 5.0) * md.alpha * md.d_y * md.d_y;
    md.c = md.h1 * uniform(rng, 1.0, 100.0) + 1e-3;
    worst_min_diam = std::max(worst_min_diam, simulate_recursion(md, 10000).max_violation);

    StrongSetRecursion ss;
    ss.c1 = uniform(rng, 0.01, 10.0);
    ss.c2 = uniform(rng, 0.01, 1.0);
    ss.h1 = uniform(rng, 0.01, 100.0);
    worst_strong_set = std::max(worst_strong_set, simulate_recursion(ss, 10000).max_violation);
  }
  const bool ok = worst_min_diam <= 1e-12 && worst_strong_set <= 1e-12;
  return finish(7, "recursion lemmas", ok,
                "max violation " + sci(worst_min_diam) + " (two-phase), " + sci(worst_strong_set) +
                    " (strong set), both <= 1e-12",
                start, 10.0);
}

CriterionResult criterion_composed_convexity() {
  const auto start = Clock::now();
  Rng rng(808);
  constexpr std::size_t kDim = 4;
  double worst = -std::numeric_limits<double>::infinity();
  double worst_eig = 0.0;
  for (int pair = 0; pair < 20; ++pair) {
    const double alpha = std::exp(uniform(rng, std::log(0.01), std::log(10.0)));
    const double delta = std::exp(uniform(rng, std::log(0.01), std::log(10.0)));
    const double tau = composed_strong_convexity(alpha, delta);
    // Smallest eigenvalue of the block Hessian [[alpha + delta, alpha], [alpha, alpha]].
    const double tr = 2.0 * alpha + delta;
    const double det = alpha * delta;
    const double lambda_min = det / (0.5 * tr + std::sqrt(0.25 * tr * tr - det));
    worst_eig = std::max(worst_eig, std::abs(tau - lambda_min) / lambda_min);
    const auto f = [&](const std::vector<double>& x, const std::vector<double>& y) {
      double acc = 0.0;
      for (std::size_t i = 0; i < kDim; ++i) acc += 0.5 * alpha * (x[i] + y[i]) * (x[i] + y[i]) + 0.5 * delta * x[i] * x[i];
      return acc;
    };
    for (int triple = 0; triple < 1000; ++triple) {
      std::vector<double> x1(kDim), y1(kDim), x2(kDim), y2(kDim);
      for (std::size_t i = 0; i < kDim; ++i) {
        x1[i] = rng.normal();
        y1[i] = rng.normal();
        x2[i] = rng.normal();
        y2[i] = rng.normal();
      }
      const double lam = rng.uniform();
      std::vector<double> xm(kDim), ym(kDim);
      double dist = 0.0;
      for (std::size_t i = 0; i < kDim; ++i) {
        xm[i] = lam * x1[i] + (1.0 - lam) * x2[i];
        ym[i] = lam * y1[i] + (1.0 - lam) * y2[i];
        dist += (x1[i] - x2[i]) * (x1[i] - x2[i]) + (y1[i] - y2[i]) * (y1[i] - y2[i]);
      }
      const double rhs = lam * f(x1, y1) + (1.0 - lam) * f(x2, y2) - tau * lam * (1.0 - lam) / 2.0 * dist;
      worst = std::max(worst, f(xm, ym) - rhs);
    }
  }
  const bool ok = worst <= 1e-10 && worst_eig <= 1e-12;
  return finish(8, "composed strong convexity", ok,
                "max excess " + sci(worst) + " (<= 1e-10) over 20000 triples, relative gap to the Hessian's smallest eigenvalue " +
                    sci(worst_eig) + " (<= 1e-12)",
                start, 10.0);
}

CriterionResult criterion_comparative() {
  const auto start = Clock::now();
  std::vector<double> f_alt;
  std::vector<double> f_cgcg;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    InstanceSpec spec;
    spec.kind = InstanceKind::Sec5;
    spec.m = spec.n = 200;
    spec.r = 5;
    spec.p = 0.001;
    spec.seed = seed;
    const Instance inst = generate(spec);
    for (Algorithm a : {Algorithm::AltCgPg, Algorithm::Cgcg}) {
      const std::optional<std::size_t> cap =
          a == Algorithm::AltCgPg ? std::optional<std::size_t>(spec.r) : std::nullopt;
      const ProblemSpec problem{inst.m_data, nuclear_ball(inst.tau, cap), l1_ball(inst.s_bound)};
      SolverConfig config;
      config.algorithm = a;
      config.line_search = true;
      config.max_iters = 500;
      config.record_every = 50;
      config.track_rank = false;
      config.svd_tol = 1e-6;
      config.seed = seed;
      const double f = solve(problem, config).trace.back().f_value;
      (a == Algorithm::AltCgPg ? f_alt : f_cgcg).push_back(f);
    }
  }
  const double alt = median(f_alt);
  const double cg = median(f_cgcg);
  return finish(9, "alternating vs pure conditional gradient", alt < cg,
                "median f at t=500: alt_cgpg " + sci(alt) + ", cgcg " + sci(cg), start, 300.0);
}

std::string read_masked(const std::filesystem::path& path, std::size_t masked_column) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read " + path.string());
  std::string out;
  std::string line;
  while (std::getline(in, line)) {
    std::size_t col = 0;
    std::string masked;
    std::size_t begin = 0;
    while (true) {
      const std::size_t comma = line.find(',', begin);
      const std::string cell = line.substr(begin, comma == std::string::npos ? std::string::npos : comma - begin);
      if (col > 0) masked += ',';
      masked += col == masked_column ? std::string("*") : cell;
      if (comma == std::string::npos) break;
      begin = comma + 1;
      ++col;
    }
    out += masked + '\n';
  }
  return out;
}

CriterionResult criterion_determinism() {
  namespace fs = std::filesystem;
  const auto start = Clock::now();
  const fs::path root = fs::temp_directory_path() / ("rmrk_determinism_" + std::to_string(
      static_cast<unsigned long long>(Clock::now().time_since_epoch().count())));
  const std::string text =
      "[instance]\nkind = known_optimum\nm = 15\nn = 12\nr = 2\np = 0.1\nseed = 3\n"
      "[solver]\nalgorithm = alt_cgpg\nline_search = true\nmax_iters = 40\nrecord_every = 3\n"
      "[problem]\nrank_cap = 2\n"
      "[output]\nrepeats = 3\nconfig_id = det\n";
  RunConfig config = parse_run_config(text);
  bool ok = true;
  std::string detail;
  try {
    config.output_dir = (root / "a").string();
    const RunOutput a = execute_run(config, 1);
    config.output_dir = (root / "b").string();
    const RunOutput b = execute_run(config, 3);
    std::size_t compared = 0;
    for (std::size_t i = 0; i < a.trace_files.size(); ++i) {
      if (read_masked(a.trace_files[i], 1) != read_masked(b.trace_files[i], 1)) ok = false;
      ++compared;
    }
    if (read_masked(a.summary_file, 5) != read_masked(b.summary_file, 5)) ok = false;
    ok = ok && compared == 3;
    detail = std::to_string(compared) + " trace files and the summary compared with wall-time columns masked: " +
             (ok ? "identical" : "different");
  } catch (const std::exception& e) {
    ok = false;
    detail = std::string("run failed: ") + e.what();
  }
  std::error_code ec;
  fs::remove_all(root, ec);
  return finish(10, "determinism", ok, detail, start, 0.0);
}

}  // namespace

std::vector<int> suite_criteria(std::string_view suite) {
  if (suite == "oracles") return {1, 7, 8};
  if (suite == "rates") return {2, 3, 4, 5};
  if (suite == "table2") return {6};
  if (suite == "comparative") return {9, 10};
  if (suite == "all") return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  return {};
}

std::vector<CriterionResult> run_criterion(int id) {
  switch (id) {
    case 1: return {criterion_oracles()};
    case 2:
    case 3: return criteria_min_diam();
    case 4: return {criterion_strong_set()};
    case 5: return {criterion_linear_rate()};
    case 6: return {criterion_table2()};
    case 7: return {criterion_lemmas()};
    case 8: return {criterion_composed_convexity()};
    case 9: return {criterion_comparative()};
    case 10: return {criterion_determinism()};
    default: throw std::invalid_argument("run_criterion: id must be in 1..10");
  }
}

std::vector<CriterionResult> run_suite(std::string_view suite, std::ostream& out) {
  std::vector<CriterionResult> results;
  for (int id : suite_criteria(suite)) {
    if (std::any_of(results.begin(), results.end(), [&](const CriterionResult& r) { return r.id == id; })) continue;
    std::vector<CriterionResult> got;
    try {
      got = run_criterion(id);
    } catch (const std::exception& e) {
      got = {CriterionResult{id, "criterion " + std::to_string(id), false, std::string("error: ") + e.what(), 0.0}};
    }
    for (CriterionResult& r : got) {
      char secs[32];
      std::snprintf(secs, sizeof secs, "%.1f", r.seconds);
      out << (r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << ": " << r.detail << " (" << secs
          << " s)" << std::endl;
      results.push_back(std::move(r));
    }
  }
  return results;
}

int acceptance_command(std::string_view suite, std::ostream& out, std::ostream& err) {
  if (suite_criteria(suite).empty()) {
    err << "usage: rmrk acceptance <oracles|rates|table2|comparative|all>\n";
    return 2;
  }
  const std::vector<CriterionResult> results = run_suite(suite, out);
  const long failed = std::count_if(results.begin(), results.end(), [](const CriterionResult& r) { return !r.passed; });
  out << results.size() - static_cast<std::size_t>(failed) << "/" << results.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace rmrk
