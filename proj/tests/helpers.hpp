#pragma once

#include <cstdint>

#include "rmrk/matrix.hpp"
#include "rmrk/rng.hpp"

namespace testing {

inline rmrk::DenseMatrix random_matrix(std::size_t m, std::size_t n, std::uint64_t seed, double scale = 1.0) {
  rmrk::Rng rng(seed);
  rmrk::DenseMatrix a(m, n);
  for (double& v : a.values()) v = scale * rng.normal();
  return a;
}

inline double max_abs_diff(const rmrk::DenseMatrix& a, const rmrk::DenseMatrix& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double e = a.values()[i] - b.values()[i];
    d = e < 0 ? (-e > d ? -e : d) : (e > d ? e : d);
  }
  return d;
}

}  // namespace testing
