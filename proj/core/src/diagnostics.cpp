#include "sr2/diagnostics.hpp"

#include <algorithm>
#include <cmath>

#include "sr2/detail/rng.hpp"

namespace sr2 {

double lyapunov_discrete(const Vec& x, const Vec& v, double A, const ProblemSpec& p,
                         const ScheduleParams& sp) {
  if (!p.optimum) throw std::invalid_argument("lyapunov_discrete: no known optimum");
  const Vec& xs = p.optimum->x_star;
  const double gap = optimal_gap(p, x);
  const double rx = (x - xs).squaredNorm();
  const double rv = (v - xs).squaredNorm();
  return A * (gap - 0.5 * sp.m * rx) + (1.0 + sp.m * A) * rv;
}

Certificate check_wdg(const ProblemSpec& p, const Vec& x, const Vec& y, const Vec& z,
                      const Vec& u, const ScheduleParams& abg) {
  const double lhs = evaluate_f(p, y) - evaluate_f(p, x);
  const Vec dyx = y - x;
  const Vec dyz = y - z;
  const Vec dzx = z - x;
  const double rhs = (p.smooth.gradient(z) + u).dot(dyx) +
                     0.5 * abg.alpha * dyz.squaredNorm() - 0.5 * abg.beta * dzx.squaredNorm() -
                     0.5 * abg.gamma * dyx.squaredNorm();
  Certificate c;
  c.name = "wdg";
  c.worst_violation = std::max(0.0, lhs - rhs);
  c.passed = c.worst_violation <= 1e-9;
  c.location = 0.0;
  return c;
}

Certificate sample_wdg_certificate(const ProblemSpec& p, const ScheduleParams& abg,
                                   int n_samples, std::uint64_t seed, double box_halfwidth,
                                   double eta_max) {
  if (n_samples < 1)
    throw std::invalid_argument("sample_wdg_certificate: n_samples must be >= 1");
  detail::Rng rng(seed);
  const Index d = p.dimension;
  const double hw = box_halfwidth;

  Certificate worst;
  worst.name = "wdg_samples";
  worst.passed = true;
  worst.worst_violation = 0.0;
  worst.location = 0.0;

  for (int i = 0; i < n_samples; ++i) {
    Vec x, z, w;
    double eta;
    switch (i % 3) {
      case 0:  // broad triple
        x = rng.uniform_vec(d, -hw, hw);
        z = rng.uniform_vec(d, -hw, hw);
        w = rng.uniform_vec(d, -hw, hw);
        eta = rng.uniform(0.05, 1.0) * eta_max;
        break;
      case 1:  // y close to z, x broad
        z = rng.uniform_vec(d, -hw, hw);
        w = z;
        x = rng.uniform_vec(d, -hw, hw);
        eta = rng.uniform(1e-4, 1e-2);
        break;
      default:  // y close to z, x displaced along the first coordinate
        z = rng.uniform_vec(d, -hw, hw);
        w = z;
        x = z;
        x[0] += (rng.uniform01() < 0.5 ? -1.0 : 1.0) * rng.uniform(0.5, 2.0);
        eta = rng.uniform(1e-4, 1e-2);
        break;
    }
    const Vec y = p.nonsmooth.prox(w, eta);
    const Vec u = (w - y) / eta;  // optimality inclusion of the prox
    const Certificate c = check_wdg(p, x, y, z, u, abg);
    if (c.worst_violation > worst.worst_violation) {
      worst.worst_violation = c.worst_violation;
      worst.location = static_cast<double>(i);
    }
    worst.passed = worst.passed && c.passed;
  }
  return worst;
}

Certificate check_appendix_rate(const std::vector<double>& q_grid) {
  if (q_grid.empty()) throw std::invalid_argument("check_appendix_rate: empty grid");
  Certificate c;
  c.name = "appendix_rate";
  double min_margin = std::numeric_limits<double>::infinity();
  double at_q = q_grid.front();
  for (const double q : q_grid) {
    if (!(q > 0.0 && q <= 1.0))
      throw std::invalid_argument("check_appendix_rate: q must lie in (0, 1]");
    const double pq = q - q * q / 4.0;
    const double lhs = (1.0 + std::sqrt(2.0 * pq - pq * pq)) / (1.0 - pq);
    const double rhs = 1.0 + std::sqrt(2.0 * q) + q;
    const double margin = lhs - rhs;
    if (margin < min_margin) {
      min_margin = margin;
      at_q = q;
    }
  }
  c.passed = min_margin > 0.0;
  c.worst_violation = -min_margin;  // negative of the minimum margin
  c.location = at_q;
  return c;
}

Certificate check_schedule_condition(const std::vector<double>& A_seq,
                                     const ScheduleParams& sp, bool require_equality) {
  if (A_seq.size() < 2)
    throw std::invalid_argument("check_schedule_condition: need at least two entries");
  Certificate c;
  c.name = require_equality ? "schedule_equality" : "schedule_condition";
  c.passed = true;
  c.worst_violation = 0.0;
  for (std::size_t i = 0; i + 1 < A_seq.size(); ++i) {
    const double A = A_seq[i], An = A_seq[i + 1];
    const double res = schedule_residual(A, An, sp);  // already normalized
    const double viol = require_equality ? std::abs(res) : std::max(0.0, res);
    if (viol > c.worst_violation) {
      c.worst_violation = viol;
      c.location = static_cast<double>(i);
    }
  }
  c.passed = c.worst_violation <= 1e-9;
  return c;
}

}  // namespace sr2
