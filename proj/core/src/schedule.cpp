#include "sr2/schedule.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace sr2 {

namespace {

ScheduleParams assemble(double L, double mu_g, double mu_h, BetaMode mode) {
  const double mu = mu_g + mu_h;
  ScheduleParams p;
  p.alpha = L;
  p.beta = (mode == BetaMode::compromised) ? mu_g - mu * mu / (4.0 * L) : mu_g;
  p.gamma = mu_h;
  p.m = p.beta + p.gamma;
  return p;
}

}  // namespace

bool schedule_params_valid(double L, double mu_g, double mu_h, BetaMode mode) {
  if (!(L > 0.0)) return false;
  const ScheduleParams p = assemble(L, mu_g, mu_h, mode);
  return p.alpha > p.beta && p.m >= -1e-12;
}

ScheduleParams make_schedule_params(double L, double mu_g, double mu_h, BetaMode mode) {
  if (!(L > 0.0)) throw std::invalid_argument("make_schedule_params: L must be positive");
  const ScheduleParams p = assemble(L, mu_g, mu_h, mode);
  if (!(p.alpha > p.beta)) {
    throw std::invalid_argument("make_schedule_params: alpha = " + std::to_string(p.alpha) +
                                " must exceed beta = " + std::to_string(p.beta));
  }
  if (!(p.m >= -1e-12)) {
    throw std::invalid_argument("make_schedule_params: beta + gamma = " + std::to_string(p.m) +
                                " must be nonnegative");
  }
  return p;
}

double advance_A(double A, const ScheduleParams& p) {
  if (!(A >= 0.0)) throw std::invalid_argument("advance_A: A must be nonnegative");
  // Grouping the radicand through m keeps the m = 0 limit exact.
  double disc = p.m * (2.0 * p.alpha - p.beta + p.gamma) * A * A +
                2.0 * (p.alpha + p.gamma) * A + 1.0;
  if (disc < 0.0) {
    if (disc >= -1e-14) {
      disc = 0.0;
    } else {
      throw numeric_error("advance_A: negative discriminant " + std::to_string(disc) +
                          " (invalid schedule parameters)");
    }
  }
  return ((p.alpha + p.gamma) * A + 1.0 + std::sqrt(disc)) / (p.alpha - p.beta);
}

double compute_B(double A, double A_next, const ScheduleParams& p) {
  if (!(A_next > A)) throw std::invalid_argument("compute_B: A_next must exceed A");
  const double om = 1.0 + p.m * A;
  if (!(om > 0.0)) throw std::invalid_argument("compute_B: 1 + m*A must be positive");
  const double B = A_next / (A_next - A) + (p.beta * A_next + p.gamma * A) / (2.0 * om);
  if (!(B > 0.0)) {
    throw numeric_error("compute_B: B = " + std::to_string(B) +
                        " is not positive (corrupted parameters)");
  }
  return B;
}

double prox_step(double A, double A_next, double B_next, const ScheduleParams& p) {
  const double eta = (A_next - A) / (2.0 * (1.0 + p.m * A) * B_next);
  if (!(eta > 0.0)) {
    throw numeric_error("prox_step: eta = " + std::to_string(eta) + " is not positive");
  }
  if (p.gamma < 0.0 && !(eta < -1.0 / p.gamma)) {
    // 2 + m (A + A+) > 0 makes this unreachable for valid schedules.
    throw invariant_violation_error("prox_step: eta = " + std::to_string(eta) +
                                    " reached -1/gamma = " + std::to_string(-1.0 / p.gamma));
  }
  return eta;
}

double schedule_residual(double A, double A_next, const ScheduleParams& p) {
  const double dA = A_next - A;
  const double res = (p.alpha - p.beta) * dA * dA - 2.0 * (1.0 + p.m * A) * A_next;
  return res / std::max(1.0, (p.alpha - p.beta) * A_next * A_next);
}

ScheduleState advance_schedule(double A, const ScheduleParams& p) {
  ScheduleState s;
  s.A = A;
  s.A_next = advance_A(A, p);
  if (!std::isfinite(s.A_next)) {
    s.B_next = std::numeric_limits<double>::quiet_NaN();
    s.eta_next = std::numeric_limits<double>::quiet_NaN();
    return s;  // schedule saturated; caller decides how to stop
  }
  s.B_next = compute_B(A, s.A_next, p);
  s.eta_next = prox_step(A, s.A_next, s.B_next, p);
  return s;
}

RateBounds rate_lower_bounds(const ScheduleParams& p, long k) {
  if (k < 0) throw std::invalid_argument("rate_lower_bounds: k must be nonnegative");
  RateBounds b;
  b.sublinear = static_cast<double>(k) * static_cast<double>(k) / (2.0 * p.alpha);
  const double q1 = p.beta / p.alpha;
  const double q2 = p.gamma / p.alpha;
  b.linear_ratio = (1.0 + q2 + std::sqrt((q1 + q2) * (2.0 - q1 + q2))) / (1.0 - q1);
  return b;
}

}  // namespace sr2
