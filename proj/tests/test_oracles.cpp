#include <cmath>
#include <limits>
#include <stdexcept>

#include "doctest.h"
#include "helpers.hpp"
#include "rmrk/oracles.hpp"
#include "rmrk/regularizer.hpp"

using rmrk::DenseMatrix;

namespace {

// Random point of the ball: a random direction scaled to a random radius.
DenseMatrix random_feasible(const rmrk::Regularizer& r, std::size_t m, std::size_t n, rmrk::Rng& rng) {
  DenseMatrix d(m, n);
  for (double& v : d.values()) v = rng.normal();
  if (rng.uniform() < 0.3) {
    d = DenseMatrix(m, n);
    d(static_cast<std::size_t>(rng.uniform() * m), static_cast<std::size_t>(rng.uniform() * n)) = 1.0;
  }
  const double scale = *rmrk::radius(r) * rng.uniform() / rmrk::constraint_norm(r, d);
  return scale * d;
}

}  // namespace

TEST_CASE("lmo examples") {
  const DenseMatrix g(2, 2, {2, -5, 1, 0});
  const DenseMatrix w = rmrk::generalized_lmo(rmrk::l1_ball(3), g).w;
  CHECK(w == DenseMatrix(2, 2, {0, 3, 0, 0}));

  const DenseMatrix l2 = rmrk::generalized_lmo(rmrk::lp_ball(2, 1), DenseMatrix(1, 2, {3, 4})).w;
  CHECK(l2(0, 0) == doctest::Approx(-0.6));
  CHECK(l2(0, 1) == doctest::Approx(-0.8));

  const DenseMatrix l15 = rmrk::generalized_lmo(rmrk::lp_ball(1.5, 1), DenseMatrix(1, 2, {1, 1})).w;
  CHECK(l15(0, 0) == doctest::Approx(-std::pow(2.0, -2.0 / 3.0)).epsilon(1e-12));
  CHECK(l15(0, 1) == doctest::Approx(-std::pow(2.0, -2.0 / 3.0)).epsilon(1e-12));

  const DenseMatrix nuc = rmrk::generalized_lmo(rmrk::nuclear_ball(2), DenseMatrix::diagonal(std::vector<double>{3, 1})).w;
  CHECK(testing::max_abs_diff(nuc, DenseMatrix(2, 2, {-2, 0, 0, 0})) <= 1e-10);
}

TEST_CASE("lmo on a zero gradient returns zero and flags it") {
  for (const auto& r : {rmrk::l1_ball(1), rmrk::lp_ball(1.3, 1), rmrk::nuclear_ball(1)}) {
    const rmrk::LmoResult res = rmrk::generalized_lmo(r, DenseMatrix(3, 2));
    CHECK(res.zero_gradient);
    CHECK(res.w == DenseMatrix(3, 2));
  }
}

TEST_CASE("lmo optimality against random feasible points") {
  rmrk::Rng rng(44);
  for (const auto& r : {rmrk::l1_ball(2.5), rmrk::lp_ball(1.2, 2), rmrk::lp_ball(1.8, 0.7), rmrk::nuclear_ball(3)}) {
    CAPTURE(rmrk::describe(r));
    for (int trial = 0; trial < 100; ++trial) {
      const DenseMatrix g = testing::random_matrix(4, 3, 1000 + trial);
      const DenseMatrix w = rmrk::generalized_lmo(r, g).w;
      CHECK(rmrk::feasibility_residual(r, w) <= 1e-10);
      const double best = rmrk::inner(w, g);
      for (int k = 0; k < 100; ++k) CHECK(best <= rmrk::inner(random_feasible(r, 4, 3, rng), g) + 1e-8);
    }
  }
}

TEST_CASE("lp lmo attains the dual norm") {
  for (double p : {1.05, 1.2, 1.5, 2.0}) {
    const double q = p / (p - 1.0);
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const DenseMatrix g = testing::random_matrix(5, 4, seed);
      const double s = 0.5 + seed * 0.1;
      const DenseMatrix w = rmrk::generalized_lmo(rmrk::lp_ball(p, s), g).w;
      CHECK(rmrk::lp_norm(w, p) == doctest::Approx(s).epsilon(1e-10));
      CHECK(rmrk::inner(w, g) == doctest::Approx(-s * rmrk::lp_norm(g, q)).epsilon(1e-10));
    }
  }
}

TEST_CASE("elastic net minimizer examples") {
  CHECK(rmrk::elastic_net_min(1, 1, DenseMatrix(1, 1, {4}))(0, 0) == doctest::Approx(-1.5));
  CHECK(rmrk::elastic_net_min(0.3, 2, DenseMatrix(2, 2)) == DenseMatrix(2, 2));
  CHECK(rmrk::elastic_net_min(2, 1, DenseMatrix(1, 1, {1}))(0, 0) == 0.0);
  CHECK(rmrk::soft_threshold(-3, 1) == -2);
  CHECK(rmrk::soft_threshold(0.5, 1) == 0);
}

TEST_CASE("elastic net minimizer against a scalar grid") {
  rmrk::Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const double l1 = 0.1 + rng.uniform();
    const double l2 = 0.5 + rng.uniform();
    const double g = 6.0 * rng.uniform() - 3.0;
    double best_w = 0.0;
    double best = std::numeric_limits<double>::infinity();
    for (long k = -50000; k <= 50000; ++k) {
      const double w = k * 1e-4;
      const double v = l1 * std::abs(w) + l2 * w * w + g * w;
      if (v < best) {
        best = v;
        best_w = w;
      }
    }
    CHECK(std::abs(rmrk::elastic_net_min(l1, l2, DenseMatrix(1, 1, {g}))(0, 0) - best_w) <= 1e-4);
  }
}

TEST_CASE("l1 ball projection examples") {
  const auto a = rmrk::project_l1_ball(std::vector<double>{3, -1}, 1);
  CHECK(a[0] == doctest::Approx(1));
  CHECK(a[1] == doctest::Approx(0));
  CHECK(rmrk::project_l1_ball(std::vector<double>{0.2, 0.3}, 1) == std::vector<double>{0.2, 0.3});
  const auto c = rmrk::project_l1_ball(std::vector<double>{1, 1}, 1);
  CHECK(c[0] == doctest::Approx(0.5));
  CHECK(c[1] == doctest::Approx(0.5));
}

TEST_CASE("l1 projection against a fine projected grid") {
  // 2-d: brute force over the boundary of the l1 ball.
  rmrk::Rng rng(9);
  for (int trial = 0; trial < 20; ++trial) {
    const std::vector<double> v{4 * rng.normal(), 4 * rng.normal()};
    const double s = 0.5 + rng.uniform();
    const auto got = rmrk::project_l1_ball(v, s);
    double best = std::numeric_limits<double>::infinity();
    for (long k = 0; k < 400000; ++k) {
      const double angle = k * (2 * M_PI / 400000);
      const double cx = std::cos(angle), cy = std::sin(angle);
      const double scale = s / (std::abs(cx) + std::abs(cy));
      const double dx = scale * cx - v[0], dy = scale * cy - v[1];
      best = std::min(best, dx * dx + dy * dy);
    }
    const double dist = (got[0] - v[0]) * (got[0] - v[0]) + (got[1] - v[1]) * (got[1] - v[1]);
    if (std::abs(v[0]) + std::abs(v[1]) > s) CHECK(dist <= best + 1e-8);
  }
}

TEST_CASE("lp ball projection") {
  const std::vector<double> v{3, 4};
  const auto p2 = rmrk::project_lp_ball(v, 2.0, 1.0);
  CHECK(p2[0] == doctest::Approx(0.6).epsilon(1e-12));
  CHECK(p2[1] == doctest::Approx(0.8).epsilon(1e-12));
  CHECK(rmrk::project_lp_ball(std::vector<double>{0.1, -0.2}, 1.5, 1.0) == std::vector<double>{0.1, -0.2});
  rmrk::Rng rng(21);
  for (double p : {1.05, 1.3, 1.7}) {
    for (int trial = 0; trial < 10; ++trial) {
      const DenseMatrix a = testing::random_matrix(1, 12, 300 + trial, 3.0);
      const std::vector<double> vv(a.values().begin(), a.values().end());
      const auto x = rmrk::project_lp_ball(vv, p, 1.0);
      CHECK(rmrk::lp_norm(x, p) <= 1.0 + 1e-12);
      double dist = 0.0;
      for (std::size_t i = 0; i < x.size(); ++i) dist += (x[i] - vv[i]) * (x[i] - vv[i]);
      // No nearby feasible perturbation is closer.
      for (int k = 0; k < 200; ++k) {
        std::vector<double> y = x;
        for (double& e : y) e += 1e-3 * rng.normal();
        const double norm = rmrk::lp_norm(y, p);
        if (norm > 1.0)
          for (double& e : y) e /= norm;
        double dy = 0.0;
        for (std::size_t i = 0; i < y.size(); ++i) dy += (y[i] - vv[i]) * (y[i] - vv[i]);
        CHECK(dist <= dy + 1e-10);
      }
    }
  }
}

TEST_CASE("low-rank nuclear prox examples") {
  const DenseMatrix c = DenseMatrix::diagonal(std::vector<double>{5, 3, 1});
  CHECK(testing::max_abs_diff(rmrk::prox_nuclear_lowrank(c, 4, 2), DenseMatrix::diagonal(std::vector<double>{3, 1, 0})) <= 1e-10);
  const DenseMatrix d = DenseMatrix::diagonal(std::vector<double>{1, 0});
  CHECK(testing::max_abs_diff(rmrk::prox_nuclear_lowrank(d, 5, 1), d) <= 1e-12);
  CHECK(rmrk::prox_nuclear_lowrank(DenseMatrix(3, 4), 2, 2) == DenseMatrix(3, 4));
}

TEST_CASE("full-rank prox matches the full-svd projection") {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const DenseMatrix a = testing::random_matrix(10, 10, seed);
    const double tau = 0.4 * rmrk::nuclear_norm(a);
    const DenseMatrix low = rmrk::prox_nuclear_lowrank(a, tau, 10, rmrk::SvdOptions{.tol = 1e-13, .max_iter = 2000});
    CHECK(rmrk::frobenius_norm(low - rmrk::project_nuclear_ball(a, tau)) <= 1e-8);
    CHECK(rmrk::nuclear_norm(low) <= tau * (1 + 1e-10));
  }
}

TEST_CASE("prox step examples") {
  const DenseMatrix z(1, 2, {3, -1});
  const DenseMatrix zero(1, 2);
  const DenseMatrix v = rmrk::prox_step(rmrk::l1_ball(1), z, zero, zero, 0.5, 1.0);
  CHECK(v(0, 0) == doctest::Approx(1));
  CHECK(v(0, 1) == doctest::Approx(0));

  const DenseMatrix c = DenseMatrix::diagonal(std::vector<double>{5, 3, 1});
  const DenseMatrix z3(3, 3);
  const DenseMatrix nuc = rmrk::prox_step(rmrk::nuclear_ball(4, 2), c, z3, z3, 1.0, 1.0);
  CHECK(testing::max_abs_diff(nuc, DenseMatrix::diagonal(std::vector<double>{3, 1, 0})) <= 1e-10);

  const DenseMatrix feasible(2, 2, {0.1, -0.2, 0.05, 0});
  const DenseMatrix z22(2, 2);
  for (const auto& r : {rmrk::l1_ball(1), rmrk::lp_ball(1.5, 1), rmrk::nuclear_ball(1), rmrk::nuclear_ball(1, 2)}) {
    CHECK(testing::max_abs_diff(rmrk::prox_step(r, feasible, z22, z22, 0.3, 1.0), feasible) <= 1e-12);
  }
  CHECK(rmrk::prox_center(z, zero, DenseMatrix(1, 2, {1, 1}), 0.5, 2.0) == DenseMatrix(1, 2, {2, -2}));
}

TEST_CASE("prox step dominates random feasible references") {
  rmrk::Rng rng(77);
  const DenseMatrix z = testing::random_matrix(6, 5, 1, 2.0);
  const DenseMatrix w = testing::random_matrix(6, 5, 2, 0.3);
  const DenseMatrix g = testing::random_matrix(6, 5, 3);
  for (const auto& r : {rmrk::l1_ball(2), rmrk::lp_ball(1.4, 2), rmrk::nuclear_ball(3), rmrk::nuclear_ball(3, 2),
                        rmrk::elastic_net(0.2, 0.4)}) {
    CAPTURE(rmrk::describe(r));
    for (double eta : {0.1, 0.7}) {
      const DenseMatrix v = rmrk::prox_step(r, z, w, g, eta, 1.0);
      const double phi = rmrk::prox_objective(r, v, z, w, g, eta, 1.0);
      for (int k = 0; k < 100; ++k) {
        DenseMatrix ref(6, 5);
        if (const auto* b = std::get_if<rmrk::NuclearBall>(&r); b && b->rank_cap) {
          ref = rmrk::matmul(testing::random_matrix(6, 2, 500 + k), testing::random_matrix(2, 5, 900 + k));
          ref = (b->tau * rng.uniform() / rmrk::nuclear_norm(ref)) * ref;
        } else if (rmrk::is_indicator(r)) {
          ref = random_feasible(r, 6, 5, rng);
        } else {
          ref = testing::random_matrix(6, 5, 700 + k);
        }
        CHECK(phi <= rmrk::prox_objective(r, ref, z, w, g, eta, 1.0) + 1e-8);
      }
    }
  }
}

TEST_CASE("regularizer values and validation") {
  CHECK(rmrk::regularizer_value(rmrk::l1_ball(1), DenseMatrix(1, 2, {0.25, -0.25})) == 0.0);
  CHECK(std::isinf(rmrk::regularizer_value(rmrk::l1_ball(1), DenseMatrix(1, 2, {1, -1}))));
  CHECK(rmrk::regularizer_value(rmrk::elastic_net(1, 1), DenseMatrix(1, 1, {2})) == 6.0);
  CHECK(rmrk::regularizer_value(rmrk::l1_ball(1), DenseMatrix(1, 1, {1 + 1e-12})) == 0.0);
  CHECK_THROWS_AS(rmrk::l1_ball(0), std::invalid_argument);
  CHECK_THROWS_AS(rmrk::lp_ball(1.0, 1), std::invalid_argument);
  CHECK_THROWS_AS(rmrk::lp_ball(2.5, 1), std::invalid_argument);
  CHECK_THROWS_AS(rmrk::nuclear_ball(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(rmrk::elastic_net(1, -1), std::invalid_argument);
  CHECK(*rmrk::euclidean_diameter(rmrk::l1_ball(3)) == 6.0);
  CHECK(*rmrk::euclidean_diameter(rmrk::nuclear_ball(2)) == 4.0);
  CHECK(!rmrk::euclidean_diameter(rmrk::elastic_net(1, 1)));
  CHECK(*rmrk::strong_convexity_modulus(rmrk::elastic_net(0.1, 0.5)) == 1.0);
}
