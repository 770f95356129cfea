#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "rmrk/datagen.hpp"
#include "rmrk/problem.hpp"
#include "rmrk/solvers.hpp"

namespace rmrk {

// Regularizer choice per block. Missing radii default to the instance's
// exact bounds (tau = ||L||_nuc, s = s_bound).
struct ProblemOverrides {
  std::string reg_x = "nuclear";   // nuclear | l1 | lp | elastic_net
  std::optional<std::string> reg_y;  // default: lp for table2, l1 otherwise
  std::optional<double> tau;
  std::optional<double> s;
  std::optional<double> p;  // lp exponent; default 1 + delta
  std::optional<std::size_t> rank_cap;
  std::optional<double> lambda1;
  std::optional<double> lambda2;
};

struct RunConfig {
  InstanceSpec instance;

  Algorithm algorithm = Algorithm::AltCgPg;
  // practical | min_diam | strong_set | fixed | fixed_strong_set | fixed_strong_reg
  std::string schedule = "practical";
  std::optional<double> eta;
  std::optional<double> gamma;
  std::optional<double> g_lower;
  bool line_search = false;
  long max_iters = 100;
  std::optional<double> f_target;
  std::optional<double> time_budget_s;
  std::optional<std::uint64_t> solver_seed;
  long record_every = 1;
  // Accelerated projected-gradient iterations started from the main solver's
  // output, on the same balls without a rank cap. 0 disables.
  long refine_iters = 0;
  std::optional<double> svd_tol;

  ProblemOverrides problem;

  std::string output_dir = "out";
  int repeats = 1;
  std::string config_id = "run";
};

/// Flat key=value lines grouped under [instance], [solver], [problem] and
/// [output]. '#' and ';' start comments. Unknown sections or keys, malformed
/// values and out-of-range settings raise ParseError.
RunConfig parse_run_config(const std::string& text);
RunConfig load_run_config(const std::string& path);

ProblemSpec build_problem(const RunConfig& config, const Instance& instance);

/// Resolves the named schedule against the problem (C and D_Y for min_diam,
/// gamma from the lp ball, delta from the elastic net).
SolverConfig build_solver(const RunConfig& config, const ProblemSpec& problem, std::uint64_t seed);

}  // namespace rmrk
