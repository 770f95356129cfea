#include "rmrk/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string_view>

#include "rmrk/errors.hpp"
#include "rmrk/oracles.hpp"
#include "rmrk/regularizer.hpp"
#include "rmrk/schedules.hpp"

namespace rmrk {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void fail(int line, const std::string& what) {
  throw ParseError("config line " + std::to_string(line) + ": " + what);
}

double to_double(std::string_view v, int line) {
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size() || !std::isfinite(out))
    fail(line, "expected a number, got '" + std::string(v) + "'");
  return out;
}

std::uint64_t to_u64(std::string_view v, int line) {
  std::uint64_t out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size())
    fail(line, "expected a non-negative integer, got '" + std::string(v) + "'");
  return out;
}

long to_positive(std::string_view v, int line) {
  const std::uint64_t out = to_u64(v, line);
  if (out < 1 || out > 1'000'000'000ULL) fail(line, "expected a positive integer, got '" + std::string(v) + "'");
  return static_cast<long>(out);
}

bool to_bool(std::string_view v, int line) {
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  fail(line, "expected true or false, got '" + std::string(v) + "'");
}

bool safe_id(std::string_view id) {
  if (id.empty() || id.front() == '.') return false;
  for (char c : id)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '.')) return false;
  return true;
}

bool known_reg(std::string_view name) {
  return name == "nuclear" || name == "l1" || name == "lp" || name == "elastic_net";
}

bool known_schedule(std::string_view name) {
  return name == "practical" || name == "min_diam" || name == "strong_set" || name == "fixed" ||
         name == "fixed_strong_set" || name == "fixed_strong_reg";
}

void set_instance(RunConfig& c, std::string_view key, std::string_view v, int line) {
  InstanceSpec& s = c.instance;
  if (key == "kind") {
    const auto kind = parse_instance_kind(v);
    if (!kind) fail(line, "unknown instance kind '" + std::string(v) + "'");
    s.kind = *kind;
  } else if (key == "m") {
    s.m = static_cast<std::size_t>(to_positive(v, line));
  } else if (key == "n") {
    s.n = static_cast<std::size_t>(to_positive(v, line));
  } else if (key == "r") {
    s.r = static_cast<std::size_t>(to_positive(v, line));
  } else if (key == "p") {
    s.p = to_double(v, line);
  } else if (key == "scale") {
    s.scale = to_double(v, line);
  } else if (key == "delta") {
    s.delta = to_double(v, line);
  } else if (key == "seed") {
    s.seed = to_u64(v, line);
  } else {
    fail(line, "unknown key '" + std::string(key) + "' in [instance]");
  }
}

void set_solver(RunConfig& c, std::string_view key, std::string_view v, int line) {
  if (key == "algorithm") {
    const auto a = parse_algorithm(v);
    if (!a) fail(line, "unknown algorithm '" + std::string(v) + "'");
    c.algorithm = *a;
  } else if (key == "schedule") {
    if (!known_schedule(v)) fail(line, "unknown schedule '" + std::string(v) + "'");
    c.schedule = std::string(v);
  } else if (key == "eta") {
    c.eta = to_double(v, line);
  } else if (key == "gamma") {
    c.gamma = to_double(v, line);
  } else if (key == "G") {
    c.g_lower = to_double(v, line);
  } else if (key == "line_search") {
    c.line_search = to_bool(v, line);
  } else if (key == "max_iters") {
    c.max_iters = to_positive(v, line);
  } else if (key == "f_target") {
    c.f_target = to_double(v, line);
  } else if (key == "time_budget_s") {
    c.time_budget_s = to_double(v, line);
  } else if (key == "seed") {
    c.solver_seed = to_u64(v, line);
  } else if (key == "record_every") {
    c.record_every = to_positive(v, line);
  } else if (key == "refine_iters") {
    c.refine_iters = to_positive(v, line);
  } else if (key == "svd_tol") {
    c.svd_tol = to_double(v, line);
  } else {
    fail(line, "unknown key '" + std::string(key) + "' in [solver]");
  }
}

void set_problem(RunConfig& c, std::string_view key, std::string_view v, int line) {
  ProblemOverrides& p = c.problem;
  if (key == "reg_x" || key == "reg_y") {
    if (!known_reg(v)) fail(line, "unknown regularizer '" + std::string(v) + "'");
    (key == "reg_x" ? p.reg_x : p.reg_y.emplace()) = std::string(v);
  } else if (key == "tau") {
    p.tau = to_double(v, line);
  } else if (key == "s") {
    p.s = to_double(v, line);
  } else if (key == "p") {
    p.p = to_double(v, line);
  } else if (key == "rank_cap") {
    p.rank_cap = static_cast<std::size_t>(to_positive(v, line));
  } else if (key == "lambda1") {
    p.lambda1 = to_double(v, line);
  } else if (key == "lambda2") {
    p.lambda2 = to_double(v, line);
  } else {
    fail(line, "unknown key '" + std::string(key) + "' in [problem]");
  }
}

void set_output(RunConfig& c, std::string_view key, std::string_view v, int line) {
  if (key == "dir") {
    if (v.empty()) fail(line, "output dir must not be empty");
    c.output_dir = std::string(v);
  } else if (key == "repeats") {
    c.repeats = static_cast<int>(std::min(to_positive(v, line), 100000L));
  } else if (key == "config_id") {
    if (!safe_id(v)) fail(line, "config_id may only use letters, digits, '_', '-' and '.'");
    c.config_id = std::string(v);
  } else {
    fail(line, "unknown key '" + std::string(key) + "' in [output]");
  }
}

Regularizer make_reg(const std::string& name, const RunConfig& c, const Instance& inst, bool for_x) {
  const ProblemOverrides& p = c.problem;
  if (name == "nuclear") return nuclear_ball(p.tau.value_or(inst.tau), p.rank_cap);
  const double radius = p.s.value_or(for_x ? inst.tau : inst.s_bound);
  if (name == "l1") return l1_ball(radius);
  if (name == "lp") {
    const double expo = p.p.value_or(1.0 + c.instance.delta.value_or(1.0));
    return lp_ball(expo, radius);
  }
  return elastic_net(p.lambda1.value_or(0.1), p.lambda2.value_or(0.5));
}

}  // namespace

RunConfig parse_run_config(const std::string& text) {
  RunConfig c;
  std::istringstream in(text);
  std::string raw;
  std::string section;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view s = raw;
    if (const auto hash = s.find_first_of("#;"); hash != std::string_view::npos) s = s.substr(0, hash);
    s = trim(s);
    if (s.empty()) continue;
    if (s.front() == '[') {
      if (s.back() != ']') fail(line, "malformed section header");
      section = std::string(trim(s.substr(1, s.size() - 2)));
      if (section != "instance" && section != "solver" && section != "problem" && section != "output")
        fail(line, "unknown section [" + section + "]");
      continue;
    }
    const auto eq = s.find('=');
    if (eq == std::string_view::npos) fail(line, "expected key = value");
    const std::string_view key = trim(s.substr(0, eq));
    const std::string_view value = trim(s.substr(eq + 1));
    if (key.empty()) fail(line, "empty key");
    if (section.empty()) fail(line, "key outside of any section");
    if (section == "instance")
      set_instance(c, key, value, line);
    else if (section == "solver")
      set_solver(c, key, value, line);
    else if (section == "problem")
      set_problem(c, key, value, line);
    else
      set_output(c, key, value, line);
  }
  try {
    validate(c.instance);
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("config: ") + e.what());
  }
  if (c.schedule == "fixed" && !(c.eta && *c.eta > 0.0 && *c.eta <= 1.0))
    throw ParseError("config: schedule = fixed needs eta in (0, 1]");
  if (c.time_budget_s && !(*c.time_budget_s > 0.0)) throw ParseError("config: time_budget_s must be > 0");
  if (c.svd_tol && !(*c.svd_tol > 0.0 && *c.svd_tol < 1.0)) throw ParseError("config: svd_tol must lie in (0, 1)");
  const ProblemOverrides& po = c.problem;
  if ((po.tau && !(*po.tau > 0.0)) || (po.s && !(*po.s > 0.0))) throw ParseError("config: tau and s must be > 0");
  if (po.p && !(*po.p > 1.0 && *po.p <= 2.0)) throw ParseError("config: p must lie in (1, 2]");
  if ((po.lambda1 && !(*po.lambda1 > 0.0)) || (po.lambda2 && !(*po.lambda2 > 0.0)))
    throw ParseError("config: lambda1 and lambda2 must be > 0");
  return c;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read config file " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_run_config(buf.str());
}

ProblemSpec build_problem(const RunConfig& config, const Instance& instance) {
  const std::string reg_y =
      config.problem.reg_y.value_or(config.instance.kind == InstanceKind::Table2 ? "lp" : "l1");
  ProblemSpec problem{instance.m_data, make_reg(config.problem.reg_x, config, instance, true),
                      make_reg(reg_y, config, instance, false)};
  validate(problem);
  return problem;
}

SolverConfig build_solver(const RunConfig& config, const ProblemSpec& problem, std::uint64_t seed) {
  SolverConfig s;
  s.algorithm = config.algorithm;
  s.line_search = config.line_search;
  s.max_iters = config.max_iters;
  s.f_target = config.f_target;
  s.time_budget_s = config.time_budget_s;
  s.seed = seed;
  s.record_every = config.record_every;
  if (config.svd_tol) s.svd_tol = *config.svd_tol;

  const Regularizer& cg_block = config.algorithm == Algorithm::AltPgCg ? problem.reg_x : problem.reg_y;
  const std::string& name = config.schedule;
  if (name == "practical") {
    s.schedule = OpenLoop{};
  } else if (name == "min_diam") {
    const auto d_y = euclidean_diameter(cg_block);
    if (!d_y) throw InvalidConstants("min_diam schedule needs a ball on the conditional-gradient block");
    const DenseMatrix zero(problem.m_data.rows(), problem.m_data.cols());
    const double c = gap_bound_C(problem, zero, zero, SvdOptions{.seed = seed});
    s.schedule = c > 0.0 ? make_min_diam_schedule(problem.alpha, problem.beta, c, *d_y)
                         : StepSchedule{MinDiamTwoPhase{problem.alpha, problem.beta, 0}};
  } else if (name == "strong_set") {
    s.schedule = make_strong_set_schedule(problem.alpha, problem.beta);
  } else if (name == "fixed") {
    s.schedule = FixedStep{config.eta.value_or(0.5)};
  } else if (name == "fixed_strong_set") {
    double gamma = 0.0;
    if (config.gamma) {
      gamma = *config.gamma;
    } else if (const auto* b = std::get_if<LpBall>(&cg_block)) {
      gamma = lp_ball_strong_convexity(b->p, b->s, problem.m_data.size());
    } else {
      throw InvalidConstants("fixed_strong_set needs gamma or an lp ball on the conditional-gradient block");
    }
    if (!config.g_lower) throw InvalidConstants("fixed_strong_set needs G");
    s.schedule = fixed_step_strong_set(problem.alpha, problem.beta, gamma, *config.g_lower);
  } else {
    const auto delta = strong_convexity_modulus(cg_block);
    if (!delta) throw InvalidConstants("fixed_strong_reg needs an elastic net on the conditional-gradient block");
    s.schedule = fixed_step_strong_reg(problem.alpha, *delta, problem.beta);
  }
  return s;
}

}  // namespace rmrk
