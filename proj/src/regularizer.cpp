#include "rmrk/regularizer.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "rmrk/matrix_io.hpp"
#include "rmrk/svd.hpp"

namespace rmrk {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

bool positive(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

void validate(const Regularizer& r) {
  std::visit(overloaded{
                 [](const NuclearBall& b) {
                   if (!positive(b.tau)) throw std::invalid_argument("NuclearBall: tau must be > 0");
                   if (b.rank_cap && *b.rank_cap < 1)
                     throw std::invalid_argument("NuclearBall: rank_cap must be >= 1");
                 },
                 [](const L1Ball& b) {
                   if (!positive(b.s)) throw std::invalid_argument("L1Ball: s must be > 0");
                 },
                 [](const LpBall& b) {
                   if (!(b.p > 1.0 && b.p <= 2.0)) throw std::invalid_argument("LpBall: p must be in (1, 2]");
                   if (!positive(b.s)) throw std::invalid_argument("LpBall: s must be > 0");
                 },
                 [](const ElasticNet& e) {
                   if (!positive(e.lambda1) || !positive(e.lambda2))
                     throw std::invalid_argument("ElasticNet: lambda1, lambda2 must be > 0");
                 },
             },
             r);
}

Regularizer nuclear_ball(double tau, std::optional<std::size_t> rank_cap) {
  Regularizer r = NuclearBall{tau, rank_cap};
  validate(r);
  return r;
}

Regularizer l1_ball(double s) {
  Regularizer r = L1Ball{s};
  validate(r);
  return r;
}

Regularizer lp_ball(double p, double s) {
  Regularizer r = LpBall{p, s};
  validate(r);
  return r;
}

Regularizer elastic_net(double lambda1, double lambda2) {
  Regularizer r = ElasticNet{lambda1, lambda2};
  validate(r);
  return r;
}

bool is_indicator(const Regularizer& r) { return !std::holds_alternative<ElasticNet>(r); }

std::string describe(const Regularizer& r) {
  return std::visit(overloaded{
                        [](const NuclearBall& b) {
                          return "nuclear(tau=" + format_double(b.tau) +
                                 (b.rank_cap ? ", rank_cap=" + std::to_string(*b.rank_cap) : "") + ")";
                        },
                        [](const L1Ball& b) { return "l1(s=" + format_double(b.s) + ")"; },
                        [](const LpBall& b) {
                          return "lp(p=" + format_double(b.p) + ", s=" + format_double(b.s) + ")";
                        },
                        [](const ElasticNet& e) {
                          return "elastic_net(lambda1=" + format_double(e.lambda1) +
                                 ", lambda2=" + format_double(e.lambda2) + ")";
                        },
                    },
                    r);
}

std::optional<double> radius(const Regularizer& r) {
  return std::visit(overloaded{
                        [](const NuclearBall& b) -> std::optional<double> { return b.tau; },
                        [](const L1Ball& b) -> std::optional<double> { return b.s; },
                        [](const LpBall& b) -> std::optional<double> { return b.s; },
                        [](const ElasticNet&) -> std::optional<double> { return std::nullopt; },
                    },
                    r);
}

std::optional<double> euclidean_diameter(const Regularizer& r) {
  if (auto rad = radius(r)) return 2.0 * *rad;
  return std::nullopt;
}

double constraint_norm(const Regularizer& r, const DenseMatrix& x) {
  return std::visit(overloaded{
                        [&](const NuclearBall&) { return nuclear_norm(x); },
                        [&](const L1Ball&) { return l1_norm(x); },
                        [&](const LpBall& b) { return lp_norm(x, b.p); },
                        [&](const ElasticNet&) { return 0.0; },
                    },
                    r);
}

double feasibility_residual(const Regularizer& r, const DenseMatrix& x) {
  const auto rad = radius(r);
  if (!rad) return 0.0;
  return std::max(0.0, constraint_norm(r, x) - *rad) / *rad;
}

double regularizer_value(const Regularizer& r, const DenseMatrix& x) {
  if (const auto* e = std::get_if<ElasticNet>(&r))
    return e->lambda1 * l1_norm(x) + e->lambda2 * frobenius_norm_sq(x);
  return feasibility_residual(r, x) <= kFeasibilitySlack ? 0.0 : std::numeric_limits<double>::infinity();
}

std::optional<double> strong_convexity_modulus(const Regularizer& r) {
  if (const auto* e = std::get_if<ElasticNet>(&r)) return 2.0 * e->lambda2;
  return std::nullopt;
}

}  // namespace rmrk
