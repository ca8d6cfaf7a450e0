#include <doctest.h>

#include <cmath>

#include "sr2/detail/rng.hpp"
#include "sr2/instances.hpp"
#include "sr2/problem.hpp"
#include "sr2/prox.hpp"
#include "test_support.hpp"

using namespace sr2;

namespace {

ProblemSpec centered_quadratic(Index d) {
  SmoothOracle g;
  g.value = [](const Vec& x) { return 0.5 * x.squaredNorm(); };
  g.gradient = [](const Vec& x) { return x; };
  g.lipschitz_L = 1.0;
  g.strong_mu = 1.0;
  Optimum opt;
  opt.x_star = Vec::Zero(d);
  opt.f_star = 0.0;
  return make_problem(std::move(g), zero_regularizer(), d, std::move(opt));
}

}  // namespace

TEST_CASE("evaluate_f: centered quadratic vanishes at the origin") {
  const ProblemSpec p = centered_quadratic(3);
  CHECK(evaluate_f(p, Vec::Zero(3)) == 0.0);
}

TEST_CASE("evaluate_f: paper6 optimum value, termwise") {
  const ProblemSpec p = build_paper6();
  REQUIRE(p.optimum.has_value());
  // h(x*) = 5000 * MCP(10;2,3) = 5000 * 6; the second block of g contributes
  // 1/2 * 1e-8 * sum_{i=1}^{5000} i at x* = (10...10, 0...0).
  const double expected = 5000.0 * 6.0 + 0.5 * 1e-8 * (5000.0 * 5001.0 / 2.0);
  CHECK(expected == doctest::Approx(30000.0625125).epsilon(1e-15));
  CHECK(evaluate_f(p, p.optimum->x_star) == doctest::Approx(expected).epsilon(1e-12));
  CHECK(p.optimum->f_star == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("evaluate_f: box indicator is +inf outside the box") {
  Vec w = Vec::Ones(2), c = Vec::Zero(2);
  Regularizer reg;
  reg.kind = Regularizer::Kind::box;
  reg.box_lo = Vec::Zero(2);
  reg.box_hi = Vec::Ones(2);
  const ProblemSpec p = make_diag_quadratic(w, c, reg);
  Vec x(2);
  x << 2.0, 0.5;
  CHECK(std::isinf(evaluate_f(p, x)));
  x << 0.5, 0.5;
  CHECK(std::isfinite(evaluate_f(p, x)));
}

TEST_CASE("evaluate_f: dimension mismatch is an argument error") {
  const ProblemSpec p = centered_quadratic(3);
  CHECK_THROWS_AS(evaluate_f(p, Vec::Zero(4)), std::invalid_argument);
  CHECK_THROWS_AS(optimal_gap(p, Vec::Zero(2)), std::invalid_argument);
}

TEST_CASE("make_problem: mu_g + mu_h must be nonnegative") {
  SmoothOracle g;
  g.value = [](const Vec& x) { return 0.5 * x.squaredNorm(); };
  g.gradient = [](const Vec& x) { return x; };
  g.lipschitz_L = 1.0;
  g.strong_mu = 0.1;
  ProxOracle h = zero_regularizer();
  h.strong_mu = -0.2;  // mu = -0.1
  CHECK_THROWS_AS(make_problem(g, h, 2), std::invalid_argument);
}

TEST_CASE("make_problem: inconsistent f_star is rejected") {
  SmoothOracle g;
  g.value = [](const Vec& x) { return 0.5 * x.squaredNorm(); };
  g.gradient = [](const Vec& x) { return x; };
  g.lipschitz_L = 1.0;
  g.strong_mu = 1.0;
  Optimum opt;
  opt.x_star = Vec::Zero(2);
  opt.f_star = 1e-3;
  CHECK_THROWS_AS(make_problem(g, zero_regularizer(), 2, opt), std::invalid_argument);
}

TEST_CASE("reformulate_convex: zero shift returns the problem unchanged") {
  const ProblemSpec p = testsup::small_quad_l1();
  const ProblemSpec r = reformulate_convex(p);
  CHECK(r.smooth.lipschitz_L == p.smooth.lipschitz_L);
  CHECK(r.smooth.strong_mu == p.smooth.strong_mu);
  CHECK(r.nonsmooth.strong_mu == 0.0);
  const Vec x = testsup::alternating_ones(10);
  CHECK(evaluate_f(r, x) == evaluate_f(p, x));
}

TEST_CASE("reformulate_convex: paper6 constants") {
  const ProblemSpec r = reformulate_convex(build_paper6());
  CHECK(r.smooth.lipschitz_L == doctest::Approx(5000.0 - 1.0 / 3.0).epsilon(1e-15));
  CHECK(r.smooth.strong_mu == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  CHECK(r.nonsmooth.strong_mu == 0.0);
}

TEST_CASE("reformulate_convex: preserves f pointwise") {
  const ProblemSpec p = testsup::small_quad_mcp();
  const ProblemSpec r = reformulate_convex(p);
  detail::Rng rng(99);
  for (int i = 0; i < 50; ++i) {
    const Vec x = rng.uniform_vec(10, -5.0, 5.0);
    const double f = evaluate_f(p, x);
    CHECK(std::abs(evaluate_f(r, x) - f) <= 1e-12 * (1.0 + std::abs(f)));
  }
}

TEST_CASE("reformulate_convex: shifted prox matches the grid oracle") {
  // h = |.|, mu_h = -1/3, eta = 1, y = 2. h^ = |.| + x^2/6; grid oracle puts
  // the minimizer at 0.75.
  SmoothOracle g;
  g.value = [](const Vec& x) { return 0.5 * x.squaredNorm(); };
  g.gradient = [](const Vec& x) { return x; };
  g.lipschitz_L = 1.0;
  g.strong_mu = 1.0;
  ProxOracle h;
  h.value = [](const Vec& x) { return x.cwiseAbs().sum(); };
  h.prox = [](const Vec& x, double eta) { return prox_l1(x, eta, 1.0); };
  h.strong_mu = -1.0 / 3.0;
  const ProblemSpec p = make_problem(g, h, 1);
  const ProblemSpec r = reformulate_convex(p);

  auto h_hat = [](double u) { return std::abs(u) + u * u / 6.0; };
  const auto oracle = testsup::grid_prox_1d(h_hat, 2.0, 1.0, -8.0, 8.0);
  CHECK(oracle.argmin == doctest::Approx(0.75).epsilon(1e-5));

  Vec y(1);
  y << 2.0;
  const Vec u = r.nonsmooth.prox(y, 1.0);
  CHECK(std::abs(u[0] - oracle.argmin) <= 1e-6 + 1e-5);
  CHECK(u[0] == doctest::Approx(0.75).epsilon(1e-12));
}

TEST_CASE("reformulate_convex: shifted prox minimizes the shifted objective") {
  const double mu_h = -1.0 / 3.0;
  SmoothOracle g;
  g.value = [](const Vec& x) { return 0.5 * x.squaredNorm(); };
  g.gradient = [](const Vec& x) { return x; };
  g.lipschitz_L = 1.0;
  g.strong_mu = 1.0;
  ProxOracle h;
  h.value = [](const Vec& x) { return x.cwiseAbs().sum(); };
  h.prox = [](const Vec& x, double eta) { return prox_l1(x, eta, 1.0); };
  h.strong_mu = mu_h;
  const ProblemSpec r = reformulate_convex(make_problem(g, h, 1));

  detail::Rng rng(4);
  for (int i = 0; i < 40; ++i) {
    const double y = rng.uniform(-6.0, 6.0);
    const double eta = rng.uniform(0.05, 3.0);  // 1 - mu_h*eta > 0 always here
    auto h_hat = [&](double u) { return std::abs(u) - 0.5 * mu_h * u * u; };
    const auto oracle = testsup::grid_prox_1d(h_hat, y, eta, -10.0, 10.0);
    Vec yv(1);
    yv << y;
    const Vec u = r.nonsmooth.prox(yv, eta);
    CHECK(std::abs(u[0] - oracle.argmin) <= 1e-6 + 1e-5);
  }
}

TEST_CASE("check_gradient: exact quadratic gradient") {
  const ProblemSpec p = centered_quadratic(4);
  const auto rep = check_gradient(p, 5, 42);
  CHECK(rep.max_relative_deviation <= 1e-7);
}

TEST_CASE("check_gradient: corrupted gradient is flagged") {
  SmoothOracle g;
  g.value = [](const Vec& x) { return 0.5 * x.squaredNorm(); };
  g.gradient = [](const Vec& x) {
    Vec out = x;
    out[0] += 1.0;  // deliberate corruption
    return out;
  };
  g.lipschitz_L = 1.0;
  g.strong_mu = 1.0;
  const ProblemSpec p = make_problem(g, zero_regularizer(), 2);
  const auto rep = check_gradient(p, 5, 42);
  CHECK(rep.max_relative_deviation >= 0.5);
}

TEST_CASE("check_gradient: paper6 smooth part") {
  const ProblemSpec p = build_paper6();
  const auto rep = check_gradient(p, 3, 7);
  CHECK(rep.max_relative_deviation <= 1e-5);
}

TEST_CASE("check_gradient: deterministic for a fixed seed") {
  const ProblemSpec p = testsup::small_quad_mcp();
  const auto a = check_gradient(p, 4, 11);
  const auto b = check_gradient(p, 4, 11);
  CHECK(a.max_relative_deviation == b.max_relative_deviation);
  CHECK_THROWS_AS(check_gradient(p, 0, 11), std::invalid_argument);
}

TEST_CASE("smooth oracle: sampled gradient Lipschitz bound") {
  const ProblemSpec p = build_paper6();
  detail::Rng rng(5);
  for (int i = 0; i < 20; ++i) {
    const Vec x = rng.uniform_vec(p.dimension, -2.0, 2.0);
    const Vec y = rng.uniform_vec(p.dimension, -2.0, 2.0);
    const double lhs = (p.smooth.gradient(x) - p.smooth.gradient(y)).norm();
    CHECK(lhs <= p.smooth.lipschitz_L * (x - y).norm() * (1.0 + 1e-12));
  }
}

TEST_CASE("optimal_gap agrees with evaluate_f - f_star away from the optimum") {
  const ProblemSpec p = build_paper6();
  const Vec x = Vec::Ones(p.dimension);
  const double direct = evaluate_f(p, x) - p.optimum->f_star;
  CHECK(optimal_gap(p, x) == doctest::Approx(direct).epsilon(1e-12));
}
