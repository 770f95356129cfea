#include "rmrk/csv.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "rmrk/errors.hpp"
#include "rmrk/matrix_io.hpp"

namespace rmrk {

namespace {

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto comma = line.find(',', start);
    out.push_back(line.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

template <class T>
T field(std::string_view s) {
  T out{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw ParseError("csv: bad field '" + std::string(s) + "'");
  return out;
}

// Lines after the header, with the header checked.
std::vector<std::string> body(const std::string& text, std::string_view header) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line) || line != header) throw ParseError("csv: unexpected header");
  std::vector<std::string> lines;
  while (std::getline(in, line))
    if (!line.empty()) lines.push_back(line);
  return lines;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << text;
  if (!out) throw IoError("write failed for " + path);
}

}  // namespace

std::string format_trace_csv(const std::vector<IterationRecord>& trace) {
  std::string out(kTraceHeader);
  out += '\n';
  for (const IterationRecord& r : trace) {
    out += std::to_string(r.t) + ',' + format_double(r.wall_time_s) + ',' + format_double(r.f_value) + ',' +
           format_double(r.eta_used) + ',' + format_double(r.feas_x) + ',' + format_double(r.feas_y) + ',' +
           std::to_string(r.rank_x) + '\n';
  }
  return out;
}

std::string format_summary_csv(const std::vector<SummaryRow>& rows) {
  std::string out(kSummaryHeader);
  out += '\n';
  for (const SummaryRow& r : rows) {
    out += r.config_id + ',' + r.algorithm + ',' + std::to_string(r.t) + ',' + format_double(r.f_median) + ',' +
           format_double(r.f_mean) + ',' + format_double(r.time_median_s) + ',' + format_double(r.rel_err_x_median) +
           ',' + format_double(r.rel_err_y_median) + '\n';
  }
  return out;
}

std::vector<IterationRecord> parse_trace_csv(const std::string& text) {
  std::vector<IterationRecord> out;
  for (const std::string& line : body(text, kTraceHeader)) {
    const auto f = split(line);
    if (f.size() != 7) throw ParseError("csv: trace row needs 7 fields");
    out.push_back({field<long>(f[0]), field<double>(f[1]), field<double>(f[2]), field<double>(f[3]),
                   field<double>(f[4]), field<double>(f[5]), field<std::size_t>(f[6])});
  }
  return out;
}

std::vector<SummaryRow> parse_summary_csv(const std::string& text) {
  std::vector<SummaryRow> out;
  for (const std::string& line : body(text, kSummaryHeader)) {
    const auto f = split(line);
    if (f.size() != 8) throw ParseError("csv: summary row needs 8 fields");
    out.push_back({std::string(f[0]), std::string(f[1]), field<long>(f[2]), field<double>(f[3]), field<double>(f[4]),
                   field<double>(f[5]), field<double>(f[6]), field<double>(f[7])});
  }
  return out;
}

void emit_trace_csv(const std::vector<IterationRecord>& trace, const std::string& path) {
  write_file(path, format_trace_csv(trace));
}

void emit_summary_csv(const std::vector<SummaryRow>& rows, const std::string& path) {
  write_file(path, format_summary_csv(rows));
}

}  // namespace rmrk
