#pragma once

#include <functional>
#include <vector>

#include "sr2/problem.hpp"
#include "sr2/types.hpp"

namespace sr2 {

struct OdeState {
  double t = 0.0;
  Vec x;
  Vec v;
};

struct OdeDeriv {
  Vec dx;
  Vec dv;
};

/// Right-hand side of the first-order continuous-time system
///   dx = 2 sqrt(mu~) coth(sqrt(mu~) t) (v - x)
///   dv = tanh(sqrt(mu~) t)/sqrt(mu~) * (mu~ (x - v) - grad f(x)),
/// with the mu~ -> 0 limit (mu_tilde < 1e-12): dx = (2/t)(v - x),
/// dv = -t grad f(x). Requires t > 0 (coth is singular at 0).
OdeDeriv item_rhs(const OdeState& s, double mu_tilde,
                  const std::function<Vec(const Vec&)>& grad_f);

struct OdeSample {
  double t = 0.0;
  Vec x;
  Vec v;
  double lyapunov = 0.0;  // NaN when the problem has no known optimum
};

/// Continuous Lyapunov function
///   E = sinh^2(s t)/mu~ (f(x) - f* - mu~/2 |x - x*|^2) + cosh^2(s t) |v - x*|^2,
/// s = sqrt(mu~); the mu~ -> 0 limit is t^2 (f(x) - f*) + |v - x*|^2.
/// Requires a known optimum. Only the smooth part enters f (the continuous
/// model assumes h = 0).
double lyapunov_continuous(const OdeState& s, const ProblemSpec& p, double mu_tilde);

/// Classical fixed-step RK4 over (0, t_end] with step t_end/steps. The
/// singular startup at t = 0 is handled by one degenerate step: the state is
/// held at x = v = x0 up to t0 = t_end/steps (the true increments vanish like
/// t0^2 there), then integrated. Uses the smooth part as f; intended for
/// problems with h = 0. Fixed-step so trajectories are deterministic.
std::vector<OdeSample> integrate(const ProblemSpec& p, double mu_tilde, double t_end,
                                 long steps, const Vec& x0);

}  // namespace sr2
