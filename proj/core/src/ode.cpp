#include "sr2/ode.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace sr2 {

namespace {
constexpr double kMuTildeFloor = 1e-12;
}

OdeDeriv item_rhs(const OdeState& s, double mu_tilde,
                  const std::function<Vec(const Vec&)>& grad_f) {
  if (!(s.t > 0.0)) throw std::invalid_argument("item_rhs: t must be positive");
  if (mu_tilde < 0.0) throw std::invalid_argument("item_rhs: mu_tilde must be nonnegative");

  OdeDeriv d;
  if (mu_tilde < kMuTildeFloor) {
    d.dx = (2.0 / s.t) * (s.v - s.x);
    d.dv = -s.t * grad_f(s.x);
    return d;
  }
  const double rt = std::sqrt(mu_tilde);
  const double th = std::tanh(rt * s.t);
  d.dx = (2.0 * rt / th) * (s.v - s.x);
  d.dv = (th / rt) * (mu_tilde * (s.x - s.v) - grad_f(s.x));
  return d;
}

double lyapunov_continuous(const OdeState& s, const ProblemSpec& p, double mu_tilde) {
  if (!p.optimum)
    throw std::invalid_argument("lyapunov_continuous: problem has no known optimum");
  if (mu_tilde < 0.0)
    throw std::invalid_argument("lyapunov_continuous: mu_tilde must be nonnegative");
  const Vec& xs = p.optimum->x_star;
  const double gap = p.smooth.value(s.x) - p.optimum->g_star;
  const double rx = (s.x - xs).squaredNorm();
  const double rv = (s.v - xs).squaredNorm();
  if (mu_tilde < kMuTildeFloor) return s.t * s.t * gap + rv;
  const double rt = std::sqrt(mu_tilde);
  const double sh = std::sinh(rt * s.t);
  const double ch = std::cosh(rt * s.t);
  return (sh * sh / mu_tilde) * (gap - 0.5 * mu_tilde * rx) + ch * ch * rv;
}

std::vector<OdeSample> integrate(const ProblemSpec& p, double mu_tilde, double t_end,
                                 long steps, const Vec& x0) {
  if (!(t_end > 0.0)) throw std::invalid_argument("integrate: t_end must be positive");
  if (steps < 1) throw std::invalid_argument("integrate: steps must be >= 1");
  if (x0.size() != p.dimension) throw std::invalid_argument("integrate: x0 dimension mismatch");

  const auto& grad = p.smooth.gradient;
  const double dt = t_end / static_cast<double>(steps);
  const bool have_opt = p.optimum.has_value();

  auto energy = [&](const OdeState& s) {
    return have_opt ? lyapunov_continuous(s, p, mu_tilde)
                    : std::numeric_limits<double>::quiet_NaN();
  };

  // Degenerate first step: both increments vanish like t^2 at the origin, so
  // the state is held at x = v = x0 up to t0 = dt.
  OdeState s{dt, x0, x0};

  std::vector<OdeSample> out;
  out.reserve(static_cast<std::size_t>(steps));
  out.push_back({s.t, s.x, s.v, energy(s)});

  for (long i = 1; i < steps; ++i) {
    const OdeDeriv k1 = item_rhs(s, mu_tilde, grad);
    const OdeState s2{s.t + 0.5 * dt, s.x + 0.5 * dt * k1.dx, s.v + 0.5 * dt * k1.dv};
    const OdeDeriv k2 = item_rhs(s2, mu_tilde, grad);
    const OdeState s3{s.t + 0.5 * dt, s.x + 0.5 * dt * k2.dx, s.v + 0.5 * dt * k2.dv};
    const OdeDeriv k3 = item_rhs(s3, mu_tilde, grad);
    const OdeState s4{s.t + dt, s.x + dt * k3.dx, s.v + dt * k3.dv};
    const OdeDeriv k4 = item_rhs(s4, mu_tilde, grad);

    s.x += (dt / 6.0) * (k1.dx + 2.0 * k2.dx + 2.0 * k3.dx + k4.dx);
    s.v += (dt / 6.0) * (k1.dv + 2.0 * k2.dv + 2.0 * k3.dv + k4.dv);
    s.t += dt;
    if (!s.x.allFinite() || !s.v.allFinite()) {
      throw divergence_error("integrate: state not finite at t = " + std::to_string(s.t) +
                             " (step too large)");
    }
    out.push_back({s.t, s.x, s.v, energy(s)});
  }
  return out;
}

}  // namespace sr2
