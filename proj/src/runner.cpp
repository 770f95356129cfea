#include "rmrk/runner.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <map>
#include <ostream>
#include <thread>
#include <variant>

#include "rmrk/datagen.hpp"
#include "rmrk/errors.hpp"

namespace rmrk {

namespace {

double relative_error(const DenseMatrix& estimate, const DenseMatrix& truth) {
  const double denom = frobenius_norm_sq(truth);
  const double num = frobenius_norm_sq(estimate - truth);
  return denom > 0.0 ? num / denom : num;
}

std::uint64_t base_seed(const RunConfig& config) {
  if (const char* env = std::getenv("RMRK_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return v;
    throw ParseError("RMRK_SEED must be a non-negative integer");
  }
  return config.instance.seed;
}

}  // namespace

double median(std::vector<double> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

std::vector<SummaryRow> summarize(const std::string& config_id, const std::string& algorithm,
                                  const std::vector<RepeatResult>& repeats) {
  // t -> per-repeat row index
  std::map<long, std::vector<std::size_t>> rows;
  for (const RepeatResult& rep : repeats)
    for (std::size_t i = 0; i < rep.trace.size(); ++i) rows[rep.trace[i].t].push_back(i);

  std::vector<SummaryRow> out;
  for (const auto& [t, idx] : rows) {
    if (idx.size() != repeats.size()) continue;
    std::vector<double> f;
    std::vector<double> time;
    std::vector<double> ex;
    std::vector<double> ey;
    double sum = 0.0;
    for (std::size_t k = 0; k < repeats.size(); ++k) {
      const RepeatResult& rep = repeats[k];
      const std::size_t i = idx[k];
      f.push_back(rep.trace[i].f_value);
      sum += rep.trace[i].f_value;
      time.push_back(rep.trace[i].wall_time_s);
      ex.push_back(i < rep.rel_err_x.size() ? rep.rel_err_x[i] : 0.0);
      ey.push_back(i < rep.rel_err_y.size() ? rep.rel_err_y[i] : 0.0);
    }
    out.push_back({config_id, algorithm, t, median(f), sum / static_cast<double>(repeats.size()), median(time),
                   median(ex), median(ey)});
  }
  return out;
}

RepeatResult run_repeat(const RunConfig& config, std::uint64_t seed) {
  InstanceSpec spec = config.instance;
  spec.seed = seed;
  const Instance inst = generate(spec);
  const ProblemSpec problem = build_problem(config, inst);
  const std::uint64_t solver_seed = config.solver_seed ? *config.solver_seed + (seed - base_seed(config)) : seed;
  SolverConfig solver = build_solver(config, problem, solver_seed);

  RepeatResult result;
  result.seed = seed;
  solver.on_record = [&](const IterationRecord&, const DenseMatrix& x, const DenseMatrix& y) {
    result.rel_err_x.push_back(relative_error(x, inst.l_true));
    result.rel_err_y.push_back(relative_error(y, inst.s_true));
  };
  SolveResult main = solve(problem, solver);
  result.trace = std::move(main.trace);
  const bool out_of_time =
      !result.trace.empty() && solver.time_budget_s && result.trace.back().wall_time_s >= *solver.time_budget_s;
  if (config.refine_iters > 0 && !result.trace.empty() && !out_of_time) {
    ProblemSpec full = problem;
    for (Regularizer* r : {&full.reg_x, &full.reg_y})
      if (auto* b = std::get_if<NuclearBall>(r)) b->rank_cap.reset();
    SolverConfig polish;
    polish.algorithm = Algorithm::Fista;
    polish.max_iters = config.refine_iters + 1;  // iterate 1 is the starting point
    polish.record_every = config.record_every;
    polish.f_target = config.f_target;
    polish.seed = solver_seed;
    polish.track_rank = solver.track_rank;
    polish.x_init = std::move(main.x);
    polish.y_init = std::move(main.y);
    const long offset = result.trace.back().t - 1;
    const double elapsed = result.trace.back().wall_time_s;
    if (solver.time_budget_s) polish.time_budget_s = *solver.time_budget_s - elapsed;
    polish.on_record = [&](const IterationRecord& rec, const DenseMatrix& x, const DenseMatrix& y) {
      // Iterate 1 repeats the main run's last row, which lacked a step.
      if (rec.t == 1) {
        result.trace.back().eta_used = rec.eta_used;
        return;
      }
      IterationRecord shifted = rec;
      shifted.t += offset;
      shifted.wall_time_s += elapsed;
      result.trace.push_back(shifted);
      solver.on_record(shifted, x, y);
    };
    solve(full, polish);
  }
  return result;
}

RunOutput execute_run(const RunConfig& config, int jobs) {
  namespace fs = std::filesystem;
  const std::uint64_t base = base_seed(config);
  const std::size_t n = static_cast<std::size_t>(config.repeats);
  std::vector<RepeatResult> results(n);
  std::vector<std::exception_ptr> errors(n);
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t k = next++; k < n; k = next++) {
      try {
        results[k] = run_repeat(config, base + k);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  const std::size_t threads = std::clamp<std::size_t>(static_cast<std::size_t>(std::max(jobs, 1)), 1, n);
  std::vector<std::thread> pool;
  for (std::size_t i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (std::thread& th : pool) th.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  std::error_code ec;
  fs::create_directories(config.output_dir, ec);
  if (ec) throw IoError("cannot create " + config.output_dir + ": " + ec.message());
  const fs::path dir(config.output_dir);

  RunOutput out;
  for (const RepeatResult& rep : results) {
    const fs::path path = dir / ("trace_" + config.config_id + "_seed" + std::to_string(rep.seed) + ".csv");
    emit_trace_csv(rep.trace, path.string());
    out.trace_files.push_back(path.string());
  }
  out.summary = summarize(config.config_id, std::string(algorithm_name(config.algorithm)), results);
  out.summary_file = (dir / ("summary_" + config.config_id + ".csv")).string();
  emit_summary_csv(out.summary, out.summary_file);
  return out;
}

int run_command(const std::string& config_path, int jobs, std::ostream& err) {
  RunConfig config;
  try {
    config = load_run_config(config_path);
    base_seed(config);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  try {
    execute_run(config, jobs);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}

int gen_command(const std::string& spec_path, const std::string& out_dir, std::ostream& err) {
  RunConfig config;
  try {
    config = load_run_config(spec_path);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  try {
    export_instance(generate(config.instance), config.instance, out_dir);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}

}  // namespace rmrk
