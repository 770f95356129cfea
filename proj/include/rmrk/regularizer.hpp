#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>

#include "rmrk/matrix.hpp"

namespace rmrk {

/// Indicator of {X : ||X||_nuc <= tau}. With a rank cap r*, the proximal
/// step is restricted to matrices of rank <= r* and needs only a rank-r* SVD.
struct NuclearBall {
  double tau = 1.0;
  std::optional<std::size_t> rank_cap;
};

/// Indicator of the entrywise l1 ball of radius s.
struct L1Ball {
  double s = 1.0;
};

/// Indicator of the entrywise lp ball of radius s, p in (1, 2].
struct LpBall {
  double p = 2.0;
  double s = 1.0;
};

/// lambda1 * ||X||_1 + lambda2 * ||X||_F^2.
struct ElasticNet {
  double lambda1 = 1.0;
  double lambda2 = 1.0;
};

using Regularizer = std::variant<NuclearBall, L1Ball, LpBall, ElasticNet>;

// Validating constructors; throw std::invalid_argument on bad parameters.
Regularizer nuclear_ball(double tau, std::optional<std::size_t> rank_cap = std::nullopt);
Regularizer l1_ball(double s);
Regularizer lp_ball(double p, double s);
Regularizer elastic_net(double lambda1, double lambda2);
void validate(const Regularizer& r);

bool is_indicator(const Regularizer& r);
std::string describe(const Regularizer& r);

/// Ball radius (tau or s); nullopt for the elastic net.
std::optional<double> radius(const Regularizer& r);

/// Euclidean diameter of the feasible ball: twice the radius for every
/// shipped ball (attained at +/- an axis point).
std::optional<double> euclidean_diameter(const Regularizer& r);

/// The norm a ball regularizer constrains, evaluated at x.
double constraint_norm(const Regularizer& r, const DenseMatrix& x);

/// Relative constraint violation max(0, norm - radius) / radius; 0 for the
/// elastic net.
double feasibility_residual(const Regularizer& r, const DenseMatrix& x);

inline constexpr double kFeasibilitySlack = 1e-9;

/// Indicator regularizers: 0 when the relative residual is within
/// kFeasibilitySlack, +inf otherwise. Elastic net: the penalty value.
double regularizer_value(const Regularizer& r, const DenseMatrix& x);

/// Strong-convexity modulus (Frobenius norm) of a regularizer that is a
/// strongly convex function: 2 * lambda2 for the elastic net.
std::optional<double> strong_convexity_modulus(const Regularizer& r);

}  // namespace rmrk
