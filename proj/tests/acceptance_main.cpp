// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// criterion fails. Each check pins its tolerance in code; the brute-force
// oracles live in test_support.hpp and are independent of the library paths
// they verify.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "sr2/detail/rng.hpp"
#include "sr2/diagnostics.hpp"
#include "sr2/instances.hpp"
#include "sr2/ode.hpp"
#include "sr2/prox.hpp"
#include "sr2/solver.hpp"
#include "test_support.hpp"

using namespace sr2;

namespace {

int g_failures = 0;

void report(int id, const std::string& name, bool passed, const std::string& detail) {
  std::printf("[%s] criterion %d: %s (%s)\n", passed ? "PASS" : "FAIL", id, name.c_str(),
              detail.c_str());
  if (!passed) ++g_failures;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

struct Instance {
  std::string name;
  ProblemSpec problem;
  Vec x0;
};

std::vector<Instance> lyapunov_instances() {
  std::vector<Instance> out;
  out.push_back({"paper6", build_paper6(), Vec::Ones(10000)});
  out.push_back({"quad10+l1", testsup::small_quad_l1(), testsup::alternating_ones(10)});
  out.push_back({"quad10+mcp", testsup::small_quad_mcp(), testsup::alternating_ones(10)});
  out.push_back({"quad2", testsup::small_quad2(), Vec::Ones(2)});
  return out;
}

void criterion1() {
  bool ok = true;
  double worst_ratio = 0.0;  // violation / tolerance
  std::string where;
  for (const Instance& inst : lyapunov_instances()) {
    for (const BetaMode mode : {BetaMode::compromised, BetaMode::plain}) {
      SolverConfig cfg;
      cfg.beta_mode = mode;
      cfg.max_iters = 2000;
      cfg.trace_every = 1;
      const SolveResult res = solve(inst.problem, cfg, inst.x0, Algorithm::sr2fista);
      const double tol = 1e-9 * std::max(1.0, res.trace.front().lyapunov);
      const double worst = testsup::max_lyapunov_increase(res.trace);
      if (worst / tol > worst_ratio) {
        worst_ratio = std::max(worst_ratio, worst / tol);
        where = inst.name + (mode == BetaMode::compromised ? "/compromised" : "/plain");
      }
      ok = ok && worst <= tol;
    }
  }
  report(1, "Lyapunov non-increasing, 4 instances x 2 beta modes, 2000 iters", ok,
         "worst violation/tolerance = " + fmt(worst_ratio) + " at " + where);
}

void criterion2() {
  // (a) strongly convex rate on paper6, compromised beta
  const ProblemSpec p6 = build_paper6();
  const Vec x0 = Vec::Ones(p6.dimension);
  SolverConfig cfg;
  cfg.max_iters = 2000;
  cfg.trace_every = 1;
  const SolveResult res = solve(p6, cfg, x0, Algorithm::sr2fista);
  const ScheduleParams sp = make_schedule_params(5000.0, 1.0, -1.0 / 3.0,
                                                 BetaMode::compromised);
  const double mu = p6.mu();
  const double r0 = (x0 - p6.optimum->x_star).squaredNorm();
  bool ok_a = true;
  double worst_a = 0.0;
  double A = 0.0;
  for (std::size_t i = 1; i < res.trace.size(); ++i) {
    A = advance_A(A, sp);
    const double bound = (4.0 * 5000.0 / mu) * r0 / A;
    const double gap = res.trace[i].f_gap;
    ok_a = ok_a && gap <= bound * (1.0 + 1e-9);
    worst_a = std::max(worst_a, gap / bound);
  }

  // (b) mu = 0 sublinear rate on a convex quadratic + l1 instance
  const ProblemSpec pc = testsup::small_quad_l1_mu0();
  const Vec y0 = testsup::alternating_ones(10);
  SolverConfig cfg2;
  cfg2.max_iters = 2000;
  cfg2.trace_every = 1;
  const SolveResult res2 = solve(pc, cfg2, y0, Algorithm::sr2fista);
  const double L = pc.smooth.lipschitz_L;
  const double r02 = (y0 - pc.optimum->x_star).squaredNorm();
  bool ok_b = true;
  double worst_b = 0.0;
  for (std::size_t i = 1; i < res2.trace.size(); ++i) {
    const double k = static_cast<double>(res2.trace[i].k);
    const double bound = 2.0 * L * r02 / (k * k);
    const double gap = res2.trace[i].f_gap;
    ok_b = ok_b && gap <= bound * (1.0 + 1e-9);
    worst_b = std::max(worst_b, gap / bound);
  }
  report(2, "gap bounds: 4L/mu |x0-x*|^2/A_k (paper6) and 2L|x0-x*|^2/k^2 (mu = 0)",
         ok_a && ok_b,
         "worst gap/bound: strongly convex " + fmt(worst_a) + ", mu=0 " + fmt(worst_b));
}

void criterion3() {
  const ScheduleParams sp = make_schedule_params(5000.0, 1.0, -1.0 / 3.0,
                                                 BetaMode::compromised);
  const double mu = 1.0 - 1.0 / 3.0;
  const double rho = rate_lower_bounds(sp, 1).linear_ratio;
  bool ok = true;
  double worst_res = 0.0;
  double A = 0.0;
  for (long k = 0; k < 10000; ++k) {
    const double An = advance_A(A, sp);
    worst_res = std::max(worst_res, std::abs(schedule_residual(A, An, sp)));
    ok = ok && std::abs(schedule_residual(A, An, sp)) <= 1e-9;
    const double kk = static_cast<double>(k + 1);
    ok = ok && An >= kk * kk / (2.0 * sp.alpha);
    if (k >= 1) ok = ok && An / A >= rho - 1e-12;
    ok = ok && 2.0 + sp.m * (A + An) > 0.0;
    ok = ok && 2.0 + mu * (A + An) > 0.0;
    A = An;
  }
  report(3, "schedule equality residual, growth floors, prox well-definedness (1e4 steps)",
         ok, "worst |residual| = " + fmt(worst_res) + ", A(1e4) = " + fmt(A));
}

void criterion4() {
  std::vector<double> grid;
  for (int i = 0; i < 200; ++i)
    grid.push_back(std::pow(10.0, -6.0 + 6.0 * static_cast<double>(i) / 199.0));
  const Certificate c = check_appendix_rate(grid);
  report(4, "rate-comparison margin strictly positive on 200-point log grid", c.passed,
         "min margin = " + fmt(-c.worst_violation) + " at q = " + fmt(c.location));
}

void criterion5() {
  detail::Rng rng(2024);
  double worst_l1 = 0, worst_mcp = 0, worst_scad = 0;
  for (int i = 0; i < 1000; ++i) {
    const double x = rng.uniform(-8.0, 8.0);
    const double lam = rng.uniform(0.2, 3.0);

    const double eta1 = rng.uniform(0.05, 2.0);
    auto l1 = [&](double u) { return lam * std::abs(u); };
    worst_l1 = std::max(worst_l1, std::abs(prox_l1_scalar(x, eta1, lam) -
                                           testsup::grid_prox_default(l1, x, eta1, lam).argmin));

    const double gam = rng.uniform(1.2, 5.0);
    const double eta2 = rng.uniform(0.05, 0.95) * gam;  // respects eta < gamma
    const McpParams mp(lam, gam);
    auto mcp = [&](double u) { return mcp_value(u, mp); };
    worst_mcp = std::max(worst_mcp, std::abs(prox_mcp_scalar(x, eta2, mp) -
                                             testsup::grid_prox_default(mcp, x, eta2, lam).argmin));

    const double a = rng.uniform(2.1, 6.0);
    const double eta3 = rng.uniform(0.05, 0.95) * (a - 1.0);
    const ScadParams sc(lam, a);
    auto scad = [&](double u) { return scad_value(u, sc); };
    worst_scad = std::max(worst_scad, std::abs(prox_scad_scalar(x, eta3, sc) -
                                               testsup::grid_prox_default(scad, x, eta3, lam).argmin));
  }
  bool ok = worst_l1 <= 1e-4 && worst_mcp <= 1e-4 && worst_scad <= 1e-4;

  // ill-posed error raised exactly at eta >= -1/mu_h
  const McpParams mp(2.0, 3.0);
  const ScadParams sc(1.0, 3.0);
  Vec one(1);
  one << 1.0;
  bool exact = true;
  try {
    prox_mcp(one, 3.0, mp);
    exact = false;
  } catch (const ill_posed_prox_error&) {
  }
  try {
    prox_scad(one, 2.0, sc);
    exact = false;
  } catch (const ill_posed_prox_error&) {
  }
  try {
    prox_mcp(one, std::nextafter(3.0, 0.0), mp);
    prox_scad(one, std::nextafter(2.0, 0.0), sc);
  } catch (const ill_posed_prox_error&) {
    exact = false;
  }
  ok = ok && exact;
  report(5, "closed-form prox vs grid oracle (1000 queries each) and ill-posed boundary",
         ok,
         "worst |diff|: l1 " + fmt(worst_l1) + ", mcp " + fmt(worst_mcp) + ", scad " +
             fmt(worst_scad) + (exact ? "; boundary exact" : "; boundary WRONG"));
}

void criterion6() {
  bool ok = true;
  std::string note;
  for (const Instance& inst : {Instance{"paper6", build_paper6(), Vec()},
                               Instance{"quad10+l1", testsup::small_quad_l1(), Vec()},
                               Instance{"quad2", testsup::small_quad2(), Vec()}}) {
    const ProblemSpec& p = inst.problem;
    const ScheduleParams good = make_schedule_params(
        p.smooth.lipschitz_L, p.smooth.strong_mu, p.nonsmooth.strong_mu, BetaMode::plain);
    const double mu_h = p.nonsmooth.strong_mu;
    const double eta_max = mu_h < 0.0 ? 0.97 * (-1.0 / mu_h) : 2.0;
    const Certificate pass_c = sample_wdg_certificate(p, good, 1000, 555, 12.0, eta_max);

    ScheduleParams bad = good;
    bad.beta += 0.5 * p.smooth.lipschitz_L;
    bad.m = bad.beta + bad.gamma;
    const Certificate fail_c = sample_wdg_certificate(p, bad, 1000, 555, 12.0, eta_max);

    ok = ok && pass_c.passed && !fail_c.passed;
    note += inst.name + " viol " + fmt(pass_c.worst_violation) + "/" +
            fmt(fail_c.worst_violation) + "; ";
  }
  report(6, "two-point gradient-surrogate inequality, 1000 triples + negative control", ok,
         note);
}

void criterion7() {
  // 1-D strongly convex quadratic f = x^2/2, x0 = 2, mu~ = mu/2 = 1/2.
  SmoothOracle g;
  g.value = [](const Vec& x) { return 0.5 * x.squaredNorm(); };
  g.gradient = [](const Vec& x) { return x; };
  g.lipschitz_L = 1.0;
  g.strong_mu = 1.0;
  Optimum opt;
  opt.x_star = Vec::Zero(1);
  opt.f_star = 0.0;
  const ProblemSpec p = make_problem(std::move(g), zero_regularizer(), 1, std::move(opt));
  Vec x0(1);
  x0 << 2.0;
  const double mu = 1.0, mut = 0.5;
  const double E0 = x0.squaredNorm();

  auto run = [&](long steps) {
    const auto traj = integrate(p, mut, 10.0, steps, x0);
    double viol = 0.0;
    bool env_ok = true;
    for (std::size_t i = 0; i < traj.size(); ++i) {
      if (i > 0) viol = std::max(viol, traj[i].lyapunov - traj[i - 1].lyapunov);
      const double gap = p.smooth.value(traj[i].x);
      const double t = traj[i].t;
      const double env = (mu / (mu / 2.0)) * E0 *
                         std::min(1.0 / (t * t), std::exp(-2.0 * std::sqrt(mut) * t));
      env_ok = env_ok && gap <= env;
    }
    return std::pair(viol, env_ok);
  };
  const auto [viol1, env1] = run(10000);
  const auto [viol2, env2] = run(20000);
  const bool mono = viol1 <= 1e-7 * E0;
  // violations are integration error: refinement must shrink them 8x, or they
  // are already indistinguishable from zero
  const bool refine = (viol2 <= 0.0) || (8.0 * viol2 <= viol1);
  const bool ok = mono && env1 && env2 && refine;
  report(7, "continuous Lyapunov decay, gap envelope, 4th-order refinement", ok,
         "worst E increase " + fmt(viol1) + " (tol " + fmt(1e-7 * E0) + "), refined " +
             fmt(viol2) + (env1 ? "; envelope holds" : "; envelope FAILS"));
}

void criterion8() {
  const ProblemSpec p = build_paper6();
  const Vec x0 = Vec::Ones(p.dimension);
  SolverConfig cfg;
  cfg.max_iters = 2000;
  cfg.trace_every = 1;
  const SolveResult sr2 = solve(p, cfg, x0, Algorithm::sr2fista);
  const SolveResult ist = solve(p, cfg, x0, Algorithm::ista);

  const double gap_sr2 = sr2.trace.back().f_gap;
  const double gap_ist = ist.trace.back().f_gap;
  const bool three_orders = 1e3 * std::max(gap_sr2, 0.0) <= gap_ist;

  const double q = p.mu() / (p.smooth.lipschitz_L + p.nonsmooth.strong_mu);
  const double gap0 = sr2.trace.front().f_gap;
  bool below_ref = true;
  for (const TraceRecord& r : sr2.trace) {
    if (r.k < 500) continue;
    const double ref = std::exp(-std::sqrt(2.0 * q) * static_cast<double>(r.k)) * gap0;
    below_ref = below_ref && r.f_gap < ref;
  }
  report(8, "paper6 run: SR2FISTA 3 orders under ISTA at k=2000, under exp(-sqrt(2q)k)",
         three_orders && below_ref,
         "gaps at 2000: sr2fista " + fmt(gap_sr2) + ", ista " + fmt(gap_ist));
}

void criterion9() {
  const ProblemSpec p = build_paper6();
  const Vec x0 = Vec::Ones(p.dimension);
  const double mu = p.mu();
  const double r0 = (x0 - p.optimum->x_star).squaredNorm();
  bool ok = true;
  std::string note;

  for (const BetaMode mode : {BetaMode::compromised, BetaMode::plain}) {
    SolverConfig cfg;
    cfg.beta_mode = mode;
    cfg.backtracking = BacktrackingConfig{1.0, 2.0};

    SolverState s = make_initial_state(x0);
    s.L_current = 1.0;
    std::vector<double> E{r0};   // E_0 = |x0 - x*|^2, independent of m
    std::vector<double> As{0.0};
    std::vector<double> gaps{optimal_gap(p, x0)};
    long retries = 0;
    for (long k = 0; k < 2000; ++k) {
      s = sr2fista_backtracking_step(s, p, cfg, &retries);
      const ScheduleParams sp = make_schedule_params(s.L_current, p.smooth.strong_mu,
                                                     p.nonsmooth.strong_mu, mode);
      E.push_back(lyapunov_discrete(s.x, s.v, s.A, p, sp));
      As.push_back(s.A);
      gaps.push_back(optimal_gap(p, s.x));
    }
    const double Lf = s.L_current;
    ok = ok && Lf <= 2.0 * 5000.0;
    ok = ok && gaps.back() <= 1e-6 * gaps.front();  // converged

    double worstE = 0.0;
    for (std::size_t i = 0; i + 1 < E.size(); ++i) worstE = std::max(worstE, E[i + 1] - E[i]);
    ok = ok && worstE <= 1e-9 * std::max(1.0, E.front());

    if (mode == BetaMode::compromised) {
      for (std::size_t i = 1; i < gaps.size(); ++i)
        ok = ok && gaps[i] <= (4.0 * Lf / mu) * r0 / As[i] * (1.0 + 1e-9);
    }
    note += std::string(mode == BetaMode::compromised ? "compromised" : "plain") + ": L=" +
            fmt(Lf) + " retries=" + std::to_string(retries) + " worst dE=" + fmt(worstE) +
            "; ";
  }
  report(9, "backtracking from L=1: converges, L <= 2 L_g, criteria 1-2 with final L", ok,
         note);
}

void criterion10() {
  Vec w(2), c(2);
  w << 1.0, 3.0;
  c << 0.4, -0.7;
  Regularizer none;
  ProblemSpec p = make_diag_quadratic(w, c, none);
  p.smooth.strong_mu = 0.0;  // beta = gamma = 0

  Vec x0(2);
  x0 << 2.0, -1.5;
  const ScheduleParams sp = make_schedule_params(3.0, 0.0, 0.0, BetaMode::plain);
  SolverConfig cfg;
  const SolverState s1 = sr2fista_step(make_initial_state(x0), p, cfg, sp);
  const Vec ref = x0 - (1.0 / 3.0) * p.smooth.gradient(x0);
  const double rel = (s1.x - ref).norm() / ref.norm();
  report(10, "h = 0, beta = gamma = 0: first step is a 1/alpha gradient step", rel <= 1e-12,
         "relative deviation = " + fmt(rel));
}

}  // namespace

int main() {
  std::printf("acceptance suite\n");
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  if (g_failures > 0) {
    std::printf("%d criterion(s) FAILED\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
