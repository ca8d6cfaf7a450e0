#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "sr2/types.hpp"

namespace sr2 {

/// Smooth part g of the composite objective: value and gradient callables
/// plus the constants the solver needs. strong_mu may be negative (weak
/// convexity). Oracles must be safe for concurrent read-only evaluation.
struct SmoothOracle {
  std::function<double(const Vec&)> value;
  std::function<Vec(const Vec&)> gradient;
  double lipschitz_L = 0.0;  // L_g
  double strong_mu = 0.0;    // mu_g, may be negative
};

/// Nonsmooth part h: value (may return +inf for indicators) and the proximal
/// map prox(x, eta) = argmin_u { eta h(u) + 1/2 |u - x|^2 }. When strong_mu
/// is negative the caller must keep eta < -1/strong_mu.
struct ProxOracle {
  std::function<double(const Vec&)> value;
  std::function<Vec(const Vec&, double)> prox;
  double strong_mu = 0.0;  // mu_h, may be negative
};

/// Known minimizer. g_star/h_star cache the split objective values at x_star
/// so optimal gaps can be formed without cancelling two large sums.
struct Optimum {
  Vec x_star;
  double f_star = 0.0;
  double g_star = 0.0;
  double h_star = 0.0;
};

struct ProblemSpec {
  SmoothOracle smooth;
  ProxOracle nonsmooth;
  Index dimension = 0;
  std::optional<Optimum> optimum;

  double mu() const { return smooth.strong_mu + nonsmooth.strong_mu; }
};

/// Validates mu_g + mu_h >= 0 and, when a minimizer is supplied, that
/// f(x_star) matches f_star to 1e-10 relative. Fills the g_star/h_star cache.
ProblemSpec make_problem(SmoothOracle smooth, ProxOracle nonsmooth, Index dimension,
                         std::optional<Optimum> optimum = std::nullopt);

/// f(x) = g(x) + h(x); +inf is allowed when h is an indicator.
double evaluate_f(const ProblemSpec& p, const Vec& x);

/// f(x) - f_star evaluated as (g(x) - g_star) + (h(x) - h_star). Requires a
/// known optimum. Algebraically equal to evaluate_f(p, x) - f_star but does
/// not lose the gap in the rounding of two large totals.
double optimal_gap(const ProblemSpec& p, const Vec& x);

/// Convexifying rewrite: moves the (possibly negative) curvature of h into g,
///   g^(x) = g(x) + mu_h/2 |x|^2,   h^(x) = h(x) - mu_h/2 |x|^2,
/// so the nonsmooth part becomes convex. The prox of h^ is obtained from the
/// prox of h through the shifted identity
///   prox_{eta h^}(y) = prox_{eta/(1-mu_h eta) h}(y / (1 - mu_h eta)).
ProblemSpec reformulate_convex(const ProblemSpec& p);

/// A regularizer that is identically zero (prox = identity).
ProxOracle zero_regularizer();

struct GradientCheckReport {
  double max_relative_deviation = 0.0;
  int samples = 0;
  std::uint64_t seed = 0;
};

/// Central-difference audit of the gradient oracle. Samples points uniformly
/// in [-1,1]^d, perturbs with step 1e-6 (1 + |x|) and reports the worst
/// coordinate deviation |fd_i - grad_i| / (1 + max_j |grad_j|). Checks every
/// coordinate when d <= 128, otherwise a seeded subset of 128 coordinates.
/// Deterministic for a fixed seed.
GradientCheckReport check_gradient(const ProblemSpec& p, int samples, std::uint64_t seed);

}  // namespace sr2
