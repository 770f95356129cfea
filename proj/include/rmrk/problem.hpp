#pragma once

#include "rmrk/matrix.hpp"
#include "rmrk/regularizer.hpp"

namespace rmrk {

/// min g(X + Y) + R_X(X) + R_Y(Y) with g(Z) = 1/2 ||Z - M||_F^2.
///
/// alpha and beta are the strong-convexity and smoothness constants of g.
/// The shipped loss has identity Hessian, so both must be 1.
struct ProblemSpec {
  DenseMatrix m_data;
  Regularizer reg_x;
  Regularizer reg_y;
  double alpha = 1.0;
  double beta = 1.0;
};

/// Throws InvalidConstants for alpha/beta other than 1 and
/// std::invalid_argument for bad regularizer parameters.
void validate(const ProblemSpec& problem);

double loss_value(const ProblemSpec& problem, const DenseMatrix& z);
/// grad g(z) = z - M.
DenseMatrix loss_gradient(const ProblemSpec& problem, const DenseMatrix& z);

/// f(x, y); +inf when an indicator is violated.
double objective(const ProblemSpec& problem, const DenseMatrix& x, const DenseMatrix& y);

}  // namespace rmrk
