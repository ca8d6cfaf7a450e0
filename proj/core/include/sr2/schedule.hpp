#pragma once

#include "sr2/types.hpp"

namespace sr2 {

/// Choice of the strong-convexity surrogate beta.
///   compromised: beta = mu_g - mu^2/(4 L_g), which turns the Lyapunov bound
///                into a bound on the raw gap f(x_k) - f*.
///   plain:       beta = mu_g.
enum class BetaMode { compromised, plain };

/// Parameters (alpha, beta, gamma) of the step-size recurrence, with
/// m = beta + gamma cached. alpha = L_g, gamma = mu_h.
struct ScheduleParams {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double m = 0.0;
};

/// Builds ScheduleParams from the problem constants; validates alpha > 0,
/// alpha > beta and m >= -1e-12.
ScheduleParams make_schedule_params(double lipschitz_L, double mu_g, double mu_h,
                                    BetaMode mode);

/// True when make_schedule_params would accept these constants.
bool schedule_params_valid(double lipschitz_L, double mu_g, double mu_h, BetaMode mode);

/// One advance of the A_k recurrence,
///   A+ = ((alpha+gamma) A + 1 + sqrt(m (2 alpha - beta + gamma) A^2
///         + 2 (alpha+gamma) A + 1)) / (alpha - beta),
/// the larger root of the step condition held with equality. A radicand in
/// [-1e-14, 0) is clamped to 0 (cancellation in the m -> 0 limit); anything
/// more negative throws numeric_error.
double advance_A(double A, const ScheduleParams& p);

///   B+ = A+/(A+ - A) + (beta A+ + gamma A) / (2 (1 + m A)).
double compute_B(double A, double A_next, const ScheduleParams& p);

/// Effective prox step eta = (A+ - A) / (2 (1 + m A) B+). When gamma < 0 the
/// step condition guarantees eta < -1/gamma; a violation throws
/// invariant_violation_error.
double prox_step(double A, double A_next, double B_next, const ScheduleParams& p);

/// Signed residual of the step condition,
///   (alpha-beta)(A+ - A)^2 - 2 (1 + m A) A+,
/// normalized by max(1, (alpha-beta) A+^2). Zero (to roundoff) for schedules
/// produced by advance_A.
double schedule_residual(double A, double A_next, const ScheduleParams& p);

struct ScheduleState {
  double A = 0.0;
  double A_next = 0.0;
  double B_next = 0.0;
  double eta_next = 0.0;
};

/// advance_A + compute_B + prox_step in one call.
ScheduleState advance_schedule(double A, const ScheduleParams& p);

struct RateBounds {
  double sublinear = 0.0;     // k^2 / (2 alpha), a lower bound on A_k
  double linear_ratio = 1.0;  // rho, a lower bound on A_{k+1}/A_k
};

/// Growth certificates of the schedule: A_k >= k^2/(2 alpha) and
/// A_{k+1}/A_k >= rho = (1 + q2 + sqrt((q1+q2)(2 - q1 + q2))) / (1 - q1)
/// with q1 = beta/alpha, q2 = gamma/alpha.
RateBounds rate_lower_bounds(const ScheduleParams& p, long k);

}  // namespace sr2
