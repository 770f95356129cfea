#include <cmath>
#include <limits>
#include <stdexcept>

#include "doctest.h"
#include "helpers.hpp"
#include "rmrk/datagen.hpp"
#include "rmrk/errors.hpp"
#include "rmrk/oracles.hpp"
#include "rmrk/problem.hpp"
#include "rmrk/solvers.hpp"
#include "rmrk/svd.hpp"

using rmrk::Algorithm;
using rmrk::DenseMatrix;

namespace {

rmrk::Instance known(std::uint64_t seed, std::size_t n = 20) {
  rmrk::InstanceSpec spec;
  spec.m = spec.n = n;
  spec.r = 3;
  spec.p = 0.05;
  spec.seed = seed;
  return rmrk::gen_known_optimum(spec);
}

rmrk::ProblemSpec exact_problem(const rmrk::Instance& inst) {
  return {inst.m_data, rmrk::nuclear_ball(inst.tau), rmrk::l1_ball(inst.s_bound)};
}

rmrk::SolverConfig config_for(Algorithm a, long iters, bool line_search) {
  rmrk::SolverConfig c;
  c.algorithm = a;
  c.max_iters = iters;
  c.line_search = line_search;
  c.track_rank = false;
  return c;
}

constexpr Algorithm kAll[] = {Algorithm::AltCgPg, Algorithm::AltPgCg, Algorithm::Cgcg, Algorithm::CgcgP,
                              Algorithm::Fista};
constexpr Algorithm kCgFamily[] = {Algorithm::AltCgPg, Algorithm::AltPgCg, Algorithm::Cgcg, Algorithm::CgcgP};

}  // namespace

TEST_CASE("objective examples") {
  const DenseMatrix z(1, 1);
  CHECK(rmrk::objective({z, rmrk::l1_ball(1), rmrk::l1_ball(1)}, z, z) == 0.0);
  const DenseMatrix one(1, 1, {1});
  CHECK(rmrk::objective({DenseMatrix(1, 1, {2}), rmrk::l1_ball(1), rmrk::l1_ball(1)}, one, one) == 0.0);
  CHECK(std::isinf(rmrk::objective({z, rmrk::l1_ball(0.5), rmrk::l1_ball(1)}, one, z)));
  CHECK_THROWS_AS(rmrk::validate(rmrk::ProblemSpec{z, rmrk::l1_ball(1), rmrk::l1_ball(1), 0.5, 1.0}),
                  rmrk::InvalidConstants);
}

TEST_CASE("algorithm names round trip") {
  for (Algorithm a : kAll) CHECK(rmrk::parse_algorithm(rmrk::algorithm_name(a)) == a);
  CHECK(!rmrk::parse_algorithm("frank_wolfe"));
}

TEST_CASE("zero data is solved at the first iterate") {
  const DenseMatrix z(4, 3);
  const rmrk::ProblemSpec p{z, rmrk::nuclear_ball(1), rmrk::l1_ball(1)};
  for (Algorithm a : kAll) {
    const rmrk::SolveResult r = rmrk::solve(p, config_for(a, 5, false));
    CHECK(r.trace.front().t == 1);
    CHECK(r.trace.front().f_value == 0.0);
    CHECK(r.x == z);
    CHECK(r.y == z);
  }
}

TEST_CASE("line search examples") {
  const DenseMatrix m = testing::random_matrix(3, 2, 1);
  const DenseMatrix z(3, 2);
  const rmrk::ProblemSpec p{m, rmrk::l1_ball(100), rmrk::l1_ball(100)};
  CHECK(rmrk::line_search(p, z, z, m, z) == doctest::Approx(1.0));
  CHECK(rmrk::line_search(p, m, z, m, z) == 0.0);
  CHECK(rmrk::line_search(p, 2.0 * m, z, z, z) == doctest::Approx(0.5));
  CHECK(rmrk::line_search(p, z, z, -1.0 * m, z) == 0.0);
}

TEST_CASE("golden-section line search matches a fine scan for the elastic net") {
  const DenseMatrix m = testing::random_matrix(4, 4, 2, 3.0);
  const rmrk::ProblemSpec p{m, rmrk::nuclear_ball(5), rmrk::elastic_net(0.3, 0.2)};
  const DenseMatrix x = testing::random_matrix(4, 4, 3, 0.1);
  const DenseMatrix y = testing::random_matrix(4, 4, 4);
  const DenseMatrix v = testing::random_matrix(4, 4, 5, 0.1);
  const DenseMatrix w = testing::random_matrix(4, 4, 6);
  const double eta = rmrk::line_search(p, x, y, v, w);
  const auto phi = [&](double e) {
    return rmrk::penalized_value(p, rmrk::convex_combination(x, v, e), rmrk::convex_combination(y, w, e));
  };
  for (int k = 0; k <= 10000; ++k) CHECK(phi(eta) <= phi(k * 1e-4) + 1e-9);
}

TEST_CASE("iterates stay feasible and line search descends") {
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const rmrk::Instance inst = known(seed);
    const rmrk::ProblemSpec p = exact_problem(inst);
    const double f0 = rmrk::objective(p, DenseMatrix(20, 20), DenseMatrix(20, 20));
    for (Algorithm a : kCgFamily) {
      CAPTURE(rmrk::algorithm_name(a));
      const rmrk::SolveResult r = rmrk::solve(p, config_for(a, 150, true));
      for (std::size_t i = 0; i < r.trace.size(); ++i) {
        CHECK(r.trace[i].feas_x <= 1e-8);
        CHECK(r.trace[i].feas_y <= 1e-8);
        CHECK(std::isfinite(r.trace[i].f_value));
        if (i > 0) CHECK(r.trace[i].f_value <= r.trace[i - 1].f_value + 1e-12 * f0);
      }
    }
  }
}

TEST_CASE("alternating method drives a known-optimum instance to zero") {
  const rmrk::Instance inst = known(5);
  const rmrk::ProblemSpec p = exact_problem(inst);
  const double f0 = rmrk::objective(p, DenseMatrix(20, 20), DenseMatrix(20, 20));
  const rmrk::SolveResult r = rmrk::solve(p, config_for(Algorithm::AltCgPg, 2000, true));
  CHECK(r.trace.back().f_value <= 1e-4 * f0);
}

TEST_CASE("two-block conditional gradient on a scalar problem") {
  const rmrk::ProblemSpec p{DenseMatrix(1, 1, {1}), rmrk::l1_ball(1), rmrk::l1_ball(1)};
  rmrk::SolverConfig c = config_for(Algorithm::Cgcg, 50, true);
  c.on_record = [](const rmrk::IterationRecord&, const DenseMatrix& x, const DenseMatrix& y) {
    CHECK(std::abs(x(0, 0)) <= 1.0);
    CHECK(std::abs(y(0, 0)) <= 1.0);
  };
  CHECK(rmrk::solve(p, c).trace.back().f_value <= 1e-20);
}

TEST_CASE("the projected-gradient step of cgcg_p never increases f") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const rmrk::ProblemSpec p = exact_problem(known(seed));
    rmrk::SolverConfig c = config_for(Algorithm::CgcgP, 100, true);
    long calls = 0;
    c.on_projection = [&](long, double before, double after) {
      ++calls;
      CHECK(after <= before + 1e-12 * std::max(1.0, before));
    };
    rmrk::solve(p, c);
    CHECK(calls == 99);
  }
}

TEST_CASE("cgcg_p converges on a known-optimum instance") {
  const rmrk::ProblemSpec p = exact_problem(known(3));
  const double f0 = rmrk::objective(p, DenseMatrix(20, 20), DenseMatrix(20, 20));
  CHECK(rmrk::solve(p, config_for(Algorithm::CgcgP, 5000, true)).trace.back().f_value <= 1e-3 * f0);
}

TEST_CASE("fista decays like 1/t^2 and beats cgcg at t = 500") {
  const rmrk::ProblemSpec p = exact_problem(known(2));
  const rmrk::SolveResult fista = rmrk::solve(p, config_for(Algorithm::Fista, 500, false));
  double early = 0.0;
  double late = 0.0;
  for (const auto& r : fista.trace) {
    const double scaled = r.f_value * static_cast<double>(r.t) * static_cast<double>(r.t);
    if (r.t >= 50 && r.t < 275) early = std::max(early, scaled);
    if (r.t >= 275 && r.t <= 500) late = std::max(late, scaled);
  }
  CHECK(late <= early);
  const rmrk::SolveResult cg = rmrk::solve(p, config_for(Algorithm::Cgcg, 500, true));
  CHECK(fista.trace.back().f_value <= cg.trace.back().f_value);
}

TEST_CASE("swapping the blocks swaps the roles") {
  const DenseMatrix m = testing::random_matrix(8, 6, 4, 2.0);
  const rmrk::ProblemSpec p{m, rmrk::l1_ball(3), rmrk::l1_ball(3)};
  for (bool ls : {false, true}) {
    rmrk::SolverConfig c = config_for(Algorithm::AltCgPg, 60, ls);
    c.seed = 9;
    const rmrk::SolveResult a = rmrk::solve(p, c);
    c.algorithm = Algorithm::AltPgCg;
    const rmrk::SolveResult b = rmrk::solve(p, c);
    REQUIRE(a.trace.size() == b.trace.size());
    for (std::size_t i = 0; i < a.trace.size(); ++i) {
      CHECK(a.trace[i].f_value == b.trace[i].f_value);
      CHECK(a.trace[i].eta_used == b.trace[i].eta_used);
    }
    CHECK(a.x == b.y);
    CHECK(a.y == b.x);
  }
}

TEST_CASE("trace rows and termination") {
  const rmrk::ProblemSpec p = exact_problem(known(1));
  rmrk::SolverConfig c = config_for(Algorithm::AltCgPg, 20, false);
  c.record_every = 7;
  c.track_rank = true;
  const auto trace = rmrk::solve(p, c).trace;
  std::vector<long> ts;
  for (const auto& r : trace) ts.push_back(r.t);
  CHECK(ts == std::vector<long>{1, 8, 15, 20});
  CHECK(trace.back().eta_used == 0.0);
  CHECK(trace.front().eta_used == doctest::Approx(1.0));
  CHECK(trace[1].eta_used == doctest::Approx(2.0 / 9));
  CHECK(trace.back().rank_x >= 1);
  for (std::size_t i = 1; i < trace.size(); ++i) CHECK(trace[i].wall_time_s >= trace[i - 1].wall_time_s);

  rmrk::SolverConfig target = config_for(Algorithm::AltCgPg, 100000, true);
  target.f_target = 1e-2 * trace.front().f_value;
  const auto stopped = rmrk::solve(p, target).trace;
  CHECK(stopped.back().f_value <= *target.f_target);
  CHECK(stopped.back().t < 100000);

  rmrk::SolverConfig timed = config_for(Algorithm::AltCgPg, 100000000, false);
  timed.time_budget_s = 0.2;
  timed.record_every = 1000;
  const auto budget = rmrk::solve(p, timed).trace;
  CHECK(budget.back().wall_time_s >= 0.2);
  CHECK(budget.back().t < 100000000);

  CHECK(rmrk::solve(p, config_for(Algorithm::Cgcg, 1, false)).trace.size() == 1);
}

TEST_CASE("solver preconditions") {
  const rmrk::Instance inst = known(1);
  const rmrk::ProblemSpec en{inst.m_data, rmrk::nuclear_ball(inst.tau), rmrk::elastic_net(0.1, 0.5)};
  CHECK_THROWS_AS(rmrk::solve(en, config_for(Algorithm::Cgcg, 5, false)), std::invalid_argument);
  CHECK_THROWS_AS(rmrk::solve(en, config_for(Algorithm::Fista, 5, false)), std::invalid_argument);
  CHECK_NOTHROW(rmrk::solve(en, config_for(Algorithm::AltCgPg, 5, true)));
  rmrk::SolverConfig bad = config_for(Algorithm::AltCgPg, 5, false);
  bad.x_init = 100.0 * inst.l_true;
  CHECK_THROWS_AS(rmrk::solve(exact_problem(inst), bad), rmrk::InfeasibleStart);
  bad = config_for(Algorithm::AltCgPg, 0, false);
  CHECK_THROWS_AS(rmrk::solve(exact_problem(inst), bad), std::invalid_argument);
  CHECK_THROWS_AS(rmrk::project(rmrk::elastic_net(1, 1), inst.l_true), std::invalid_argument);
}

TEST_CASE("rank-capped alternating solve uses low-rank prox outputs") {
  const rmrk::Instance inst = known(4, 30);
  const rmrk::Regularizer capped = rmrk::nuclear_ball(inst.tau, 3);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const DenseMatrix z = testing::random_matrix(30, 30, 40 + seed);
    const DenseMatrix w = testing::random_matrix(30, 30, 50 + seed);
    const DenseMatrix g = testing::random_matrix(30, 30, 60 + seed);
    const DenseMatrix v = rmrk::prox_step(capped, z, w, g, 0.5, 1.0);
    CHECK(rmrk::numerical_rank(rmrk::full_svd(v).s) <= 3);
    CHECK(rmrk::nuclear_norm(v) <= inst.tau * (1 + 1e-9));
  }
  // X_t mixes capped outputs, so only feasibility survives along the path.
  const rmrk::ProblemSpec p{inst.m_data, capped, rmrk::l1_ball(inst.s_bound)};
  rmrk::SolverConfig c = config_for(Algorithm::AltCgPg, 200, true);
  const rmrk::SolveResult res = rmrk::solve(p, c);
  CHECK(rmrk::nuclear_norm(res.x) <= inst.tau * (1 + 1e-9));
  CHECK(res.trace.back().f_value < res.trace.front().f_value);
}

TEST_CASE("solves are deterministic") {
  const rmrk::Instance inst = known(6, 25);
  const rmrk::ProblemSpec p{inst.m_data, rmrk::nuclear_ball(inst.tau, 3), rmrk::l1_ball(inst.s_bound)};
  for (Algorithm a : kAll) {
    rmrk::SolverConfig c = config_for(a, 40, a != Algorithm::Fista);
    c.seed = 5;
    const rmrk::ProblemSpec& q = a == Algorithm::AltCgPg || a == Algorithm::AltPgCg ? p : exact_problem(inst);
    const rmrk::SolveResult x = rmrk::solve(q, c);
    const rmrk::SolveResult y = rmrk::solve(q, c);
    CHECK(x.x == y.x);
    CHECK(x.y == y.y);
    for (std::size_t i = 0; i < x.trace.size(); ++i) CHECK(x.trace[i].f_value == y.trace[i].f_value);
  }
}
