#include "rmrk/matrix_io.hpp"

#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include "rmrk/errors.hpp"

namespace rmrk {

namespace {

constexpr const char* kHeader = "%%MatrixMarket matrix array real general";

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_matrix_market(const DenseMatrix& m) {
  std::string out = kHeader;
  out += '\n';
  out += std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (std::size_t i = 0; i < m.rows(); ++i) {
      out += format_double(m(i, j));
      out += '\n';
    }
  return out;
}

DenseMatrix parse_matrix_market(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw ParseError("matrix market: empty input");
  {
    std::istringstream hs(line);
    std::vector<std::string> tokens;
    for (std::string t; hs >> t;) tokens.push_back(lower(t));
    if (tokens.size() != 5 || tokens[0] != "%%matrixmarket" || tokens[1] != "matrix" ||
        tokens[2] != "array" || tokens[3] != "real" || tokens[4] != "general")
      throw ParseError("matrix market: expected header '" + std::string(kHeader) + "'");
  }

  // Skip comments and blank lines before the size line.
  bool have_size = false;
  long long rows = 0, cols = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '%') continue;
    std::istringstream ss(line);
    std::string extra;
    if (!(ss >> rows >> cols) || (ss >> extra))
      throw ParseError("matrix market: malformed size line '" + line + "'");
    have_size = true;
    break;
  }
  if (!have_size) throw ParseError("matrix market: missing size line");
  if (rows <= 0 || cols <= 0) throw ParseError("matrix market: dimensions must be positive");

  const auto r = static_cast<std::size_t>(rows);
  const auto c = static_cast<std::size_t>(cols);
  std::vector<double> column_major;
  column_major.reserve(r * c);
  for (std::string token; in >> token;) {
    if (token[0] == '%') {
      std::getline(in, line);
      continue;
    }
    errno = 0;
    char* end = nullptr;
    const double v = std::strtod(token.c_str(), &end);
    if (end == token.c_str() || *end != '\0' || errno == ERANGE || !std::isfinite(v))
      throw ParseError("matrix market: bad entry '" + token + "'");
    column_major.push_back(v);
  }
  if (column_major.size() != r * c)
    throw ParseError("matrix market: expected " + std::to_string(r * c) + " entries, found " +
                     std::to_string(column_major.size()));

  std::vector<double> row_major(r * c);
  for (std::size_t j = 0; j < c; ++j)
    for (std::size_t i = 0; i < r; ++i) row_major[i * c + j] = column_major[j * r + i];
  return DenseMatrix(r, c, std::move(row_major));
}

DenseMatrix read_matrix(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("read failed for '" + path + "'");
  return parse_matrix_market(buf.str());
}

void write_matrix(const std::string& path, const DenseMatrix& m) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << format_matrix_market(m);
  if (!out) throw IoError("write failed for '" + path + "'");
}

}  // namespace rmrk
