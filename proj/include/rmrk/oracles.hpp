#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rmrk/matrix.hpp"
#include "rmrk/regularizer.hpp"
#include "rmrk/svd.hpp"

namespace rmrk {

struct LmoResult {
  DenseMatrix w;
  // Set when a ball oracle saw an all-zero gradient; w is then the zero
  // matrix (every feasible point is optimal).
  bool zero_gradient = false;
};

/// argmin_W { R(W) + <W, grad> } over the whole space. For balls this is the
/// linear minimization oracle; for the elastic net it is elastic_net_min.
/// The nuclear-ball case needs the top singular pair of grad and uses
/// `svd` for its tolerance, seed and warm start.
LmoResult generalized_lmo(const Regularizer& r, const DenseMatrix& grad, const SvdOptions& svd = {});

double soft_threshold(double x, double threshold);

/// argmin_W { lambda1 ||W||_1 + lambda2 ||W||_F^2 + <W, grad> }, entrywise
/// soft_threshold(-grad / (2 lambda2), lambda1 / (2 lambda2)).
DenseMatrix elastic_net_min(double lambda1, double lambda2, const DenseMatrix& grad);

/// Euclidean projection onto {x : ||x||_1 <= s}, sort-based, O(d log d).
std::vector<double> project_l1_ball(std::span<const double> v, double s);

/// Euclidean projection onto {x : ||x||_p <= s} for p in (1, 2]. No closed
/// form: bisection on the multiplier with a safeguarded Newton solve per
/// entry. The result satisfies ||x||_p <= s.
std::vector<double> project_lp_ball(std::span<const double> v, double p, double s);

/// argmin over {X : ||X||_nuc <= tau, rank(X) <= r_star} of ||X - center||_F^2:
/// rank-r_star truncated SVD, then l1-ball projection of the singular values.
DenseMatrix prox_nuclear_lowrank(const DenseMatrix& center, double tau, std::size_t r_star,
                                 const SvdOptions& svd = {});

/// Projection onto the nuclear ball without a rank cap (full SVD).
DenseMatrix project_nuclear_ball(const DenseMatrix& center, double tau);

/// Center of the proximal step: z - w - grad / (eta * beta).
DenseMatrix prox_center(const DenseMatrix& z, const DenseMatrix& w, const DenseMatrix& grad, double eta,
                        double beta);

/// argmin_V { R(V) + <V, grad> + (eta beta / 2) ||V + w - z||^2 }. For the
/// nuclear ball with a rank cap the minimization is restricted to rank <= cap.
DenseMatrix prox_step(const Regularizer& r, const DenseMatrix& z, const DenseMatrix& w,
                      const DenseMatrix& grad, double eta, double beta, const SvdOptions& svd = {});

/// The objective phi(V) that prox_step minimizes, for certifying its outputs.
double prox_objective(const Regularizer& r, const DenseMatrix& v, const DenseMatrix& z, const DenseMatrix& w,
                      const DenseMatrix& grad, double eta, double beta);

}  // namespace rmrk
