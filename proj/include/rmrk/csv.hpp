#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rmrk/solvers.hpp"

namespace rmrk {

inline constexpr std::string_view kTraceHeader = "t,wall_time_s,f_value,eta_used,feas_x,feas_y,rank_x";
inline constexpr std::string_view kSummaryHeader =
    "config_id,algorithm,t,f_median,f_mean,time_median_s,rel_err_x_median,rel_err_y_median";

struct SummaryRow {
  std::string config_id;
  std::string algorithm;
  long t = 0;
  double f_median = 0.0;
  double f_mean = 0.0;
  double time_median_s = 0.0;
  double rel_err_x_median = 0.0;
  double rel_err_y_median = 0.0;
};

// Reals are written with 17 significant digits, so parsing recovers them
// bit for bit.
std::string format_trace_csv(const std::vector<IterationRecord>& trace);
std::string format_summary_csv(const std::vector<SummaryRow>& rows);
std::vector<IterationRecord> parse_trace_csv(const std::string& text);
std::vector<SummaryRow> parse_summary_csv(const std::string& text);

// Throw IoError when the file cannot be written.
void emit_trace_csv(const std::vector<IterationRecord>& trace, const std::string& path);
void emit_summary_csv(const std::vector<SummaryRow>& rows, const std::string& path);

}  // namespace rmrk
