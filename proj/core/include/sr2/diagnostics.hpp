#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sr2/problem.hpp"
#include "sr2/schedule.hpp"
#include "sr2/types.hpp"

namespace sr2 {

/// Outcome of one mechanical check of a proved inequality. Certificates are
/// pure observers: they never abort the algorithm under test.
struct Certificate {
  std::string name;
  bool passed = false;
  double worst_violation = 0.0;
  double location = 0.0;  // iteration index or parameter value of the worst case
};

/// Discrete Lyapunov function at (x, v, A):
///   E = A (f(x) - f* - m/2 |x - x*|^2) + (1 + m A) |v - x*|^2,  m = beta+gamma,
/// using cosh^2 = 1 + m A and A = sinh^2/m. Requires a known optimum; the gap
/// is formed with optimal_gap so late iterations are not drowned in rounding.
double lyapunov_discrete(const Vec& x, const Vec& v, double A, const ProblemSpec& p,
                         const ScheduleParams& sp);

/// Checks the two-point gradient-surrogate inequality
///   f(y) - f(x) <= <grad g(z) + u, y - x> + alpha/2 |y-z|^2
///                  - beta/2 |z-x|^2 - gamma/2 |y-x|^2
/// for u in the subdifferential of h at y. With (alpha, beta, gamma) =
/// (L_g, mu_g, mu_h) this holds for every triple; tolerance 1e-9.
Certificate check_wdg(const ProblemSpec& p, const Vec& x, const Vec& y, const Vec& z,
                      const Vec& u, const ScheduleParams& abg);

/// Runs check_wdg on n sampled triples. The sampler recovers subgradients
/// from prox calls (u = (w - prox(w))/eta) and mixes broad triples with
/// near-tight ones (y ~ z, and x displaced along the first coordinate) so
/// that wrong parameters actually fail. Deterministic for a fixed seed.
Certificate sample_wdg_certificate(const ProblemSpec& p, const ScheduleParams& abg,
                                   int n_samples, std::uint64_t seed, double box_halfwidth,
                                   double eta_max);

/// Verifies, pointwise on q_grid in (0, 1], that the schedule's geometric
/// ratio strictly beats 1 + sqrt(2q) + q:
///   (1 + sqrt(2p - p^2)) / (1 - p) > 1 + sqrt(2q) + q,  p = q - q^2/4.
/// Records the minimum margin in worst_violation (negated when failing).
Certificate check_appendix_rate(const std::vector<double>& q_grid);

/// Residual check of the step condition over a full A-sequence. With
/// require_equality the residual must vanish (schedules from advance_A);
/// otherwise only the inequality residual <= 0 is demanded. Tolerance
/// 1e-9 relative to max(1, (alpha-beta) A+^2).
Certificate check_schedule_condition(const std::vector<double>& A_seq,
                                     const ScheduleParams& sp,
                                     bool require_equality = false);

}  // namespace sr2
