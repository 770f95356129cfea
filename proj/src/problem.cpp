#include "rmrk/problem.hpp"

#include <cmath>
#include <limits>

#include "rmrk/errors.hpp"

namespace rmrk {

void validate(const ProblemSpec& problem) {
  validate(problem.reg_x);
  validate(problem.reg_y);
  if (problem.alpha != 1.0 || problem.beta != 1.0)
    throw InvalidConstants("g(Z) = 1/2 ||Z - M||_F^2 has alpha = beta = 1");
}

double loss_value(const ProblemSpec& problem, const DenseMatrix& z) {
  return 0.5 * frobenius_norm_sq(z - problem.m_data);
}

DenseMatrix loss_gradient(const ProblemSpec& problem, const DenseMatrix& z) { return z - problem.m_data; }

double objective(const ProblemSpec& problem, const DenseMatrix& x, const DenseMatrix& y) {
  const double rx = regularizer_value(problem.reg_x, x);
  const double ry = regularizer_value(problem.reg_y, y);
  if (!std::isfinite(rx) || !std::isfinite(ry)) return std::numeric_limits<double>::infinity();
  return loss_value(problem, x + y) + rx + ry;
}

}  // namespace rmrk
