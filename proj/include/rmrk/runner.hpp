#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "rmrk/config.hpp"
#include "rmrk/csv.hpp"
#include "rmrk/solvers.hpp"

namespace rmrk {

/// One repeat: the trace plus relative errors ||X - X*||^2 / ||X*||^2 and
/// the same for Y, aligned with the trace rows.
struct RepeatResult {
  std::uint64_t seed = 0;
  std::vector<IterationRecord> trace;
  std::vector<double> rel_err_x;
  std::vector<double> rel_err_y;
};

/// Medians and means across repeats at every t recorded by all of them.
std::vector<SummaryRow> summarize(const std::string& config_id, const std::string& algorithm,
                                  const std::vector<RepeatResult>& repeats);

double median(std::vector<double> values);

/// Generates the instance for `seed`, solves it and collects errors. With
/// refine_iters > 0 the refinement rows follow the main solver's rows, their
/// t continuing from its last iterate.
RepeatResult run_repeat(const RunConfig& config, std::uint64_t seed);

struct RunOutput {
  std::vector<std::string> trace_files;
  std::string summary_file;
  std::vector<SummaryRow> summary;
};

/// Repeat k uses seed base + k, where base is RMRK_SEED when set and the
/// instance seed otherwise. Writes trace_<id>_seed<seed>.csv per repeat and
/// summary_<id>.csv, all inside config.output_dir. `jobs` repeats run at once.
RunOutput execute_run(const RunConfig& config, int jobs);

/// The `run` subcommand: 0 on success, 2 on a config error, 3 when
/// generation or solving fails. Messages go to err.
int run_command(const std::string& config_path, int jobs, std::ostream& err);

/// The `gen` subcommand: writes the instance described by the [instance]
/// section of spec_path into out_dir.
int gen_command(const std::string& spec_path, const std::string& out_dir, std::ostream& err);

}  // namespace rmrk
