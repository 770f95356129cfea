#pragma once

#include <string>

#include "rmrk/matrix.hpp"

namespace rmrk {

// Matrix Market "array real general" files. Entries are column-major on
// disk and written with 17 significant digits so a write/read round trip is
// exact. Throws ParseError on malformed content and IoError on file errors.
DenseMatrix read_matrix(const std::string& path);
void write_matrix(const std::string& path, const DenseMatrix& m);

DenseMatrix parse_matrix_market(const std::string& text);
std::string format_matrix_market(const DenseMatrix& m);

// printf("%.17g") of a double; shared by every text writer in the project.
std::string format_double(double v);

}  // namespace rmrk
