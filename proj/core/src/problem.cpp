#include "sr2/problem.hpp"

#include <cmath>
#include <utility>

#include "sr2/detail/rng.hpp"

namespace sr2 {

namespace {

void require_dimension(const ProblemSpec& p, const Vec& x, const char* where) {
  if (x.size() != p.dimension) {
    throw std::invalid_argument(std::string(where) + ": point has length " +
                                std::to_string(x.size()) + ", problem dimension is " +
                                std::to_string(p.dimension));
  }
}

}  // namespace

ProblemSpec make_problem(SmoothOracle smooth, ProxOracle nonsmooth, Index dimension,
                         std::optional<Optimum> optimum) {
  if (dimension <= 0) throw std::invalid_argument("make_problem: dimension must be positive");
  if (!smooth.value || !smooth.gradient)
    throw std::invalid_argument("make_problem: smooth oracle is incomplete");
  if (!nonsmooth.value || !nonsmooth.prox)
    throw std::invalid_argument("make_problem: prox oracle is incomplete");
  const double mu = smooth.strong_mu + nonsmooth.strong_mu;
  if (!(mu >= 0.0)) {
    throw std::invalid_argument("make_problem: mu_g + mu_h = " + std::to_string(mu) +
                                " must be nonnegative");
  }

  ProblemSpec p;
  p.smooth = std::move(smooth);
  p.nonsmooth = std::move(nonsmooth);
  p.dimension = dimension;

  if (optimum) {
    if (optimum->x_star.size() != dimension)
      throw std::invalid_argument("make_problem: x_star has the wrong length");
    optimum->g_star = p.smooth.value(optimum->x_star);
    optimum->h_star = p.nonsmooth.value(optimum->x_star);
    const double f_at_star = optimum->g_star + optimum->h_star;
    const double tol = 1e-10 * std::max(1.0, std::abs(optimum->f_star));
    if (!(std::abs(f_at_star - optimum->f_star) <= tol)) {
      throw std::invalid_argument("make_problem: f(x_star) = " + std::to_string(f_at_star) +
                                  " does not match f_star = " + std::to_string(optimum->f_star));
    }
    p.optimum = std::move(optimum);
  }
  return p;
}

double evaluate_f(const ProblemSpec& p, const Vec& x) {
  require_dimension(p, x, "evaluate_f");
  return p.smooth.value(x) + p.nonsmooth.value(x);
}

double optimal_gap(const ProblemSpec& p, const Vec& x) {
  require_dimension(p, x, "optimal_gap");
  if (!p.optimum) throw std::invalid_argument("optimal_gap: problem has no known optimum");
  return (p.smooth.value(x) - p.optimum->g_star) + (p.nonsmooth.value(x) - p.optimum->h_star);
}

ProxOracle zero_regularizer() {
  ProxOracle h;
  h.value = [](const Vec&) { return 0.0; };
  h.prox = [](const Vec& x, double) { return x; };
  h.strong_mu = 0.0;
  return h;
}

ProblemSpec reformulate_convex(const ProblemSpec& p) {
  const double mu_h = p.nonsmooth.strong_mu;
  if (mu_h == 0.0) return p;

  SmoothOracle g = p.smooth;
  ProxOracle h = p.nonsmooth;

  SmoothOracle g_hat;
  g_hat.value = [g, mu_h](const Vec& x) { return g.value(x) + 0.5 * mu_h * x.squaredNorm(); };
  g_hat.gradient = [g, mu_h](const Vec& x) { return Vec(g.gradient(x) + mu_h * x); };
  g_hat.lipschitz_L = g.lipschitz_L + mu_h;
  g_hat.strong_mu = g.strong_mu + mu_h;

  ProxOracle h_hat;
  h_hat.value = [h, mu_h](const Vec& x) { return h.value(x) - 0.5 * mu_h * x.squaredNorm(); };
  h_hat.prox = [h, mu_h](const Vec& y, double eta) {
    const double scale = 1.0 - mu_h * eta;
    if (!(scale > 0.0)) {
      throw ill_posed_prox_error("shifted prox: 1 - mu_h*eta = " + std::to_string(scale) +
                                 " must be positive");
    }
    return h.prox(y / scale, eta / scale);
  };
  h_hat.strong_mu = 0.0;

  std::optional<Optimum> opt;
  if (p.optimum) opt = Optimum{p.optimum->x_star, p.optimum->f_star, 0.0, 0.0};
  return make_problem(std::move(g_hat), std::move(h_hat), p.dimension, std::move(opt));
}

GradientCheckReport check_gradient(const ProblemSpec& p, int samples, std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("check_gradient: samples must be >= 1");
  detail::Rng rng(seed);
  const Index d = p.dimension;
  const Index n_coords = std::min<Index>(d, 128);

  double worst = 0.0;
  for (int s = 0; s < samples; ++s) {
    const Vec x = rng.uniform_vec(d, -1.0, 1.0);
    const double delta = 1e-6 * (1.0 + x.norm());
    const Vec an = p.smooth.gradient(x);
    const double scale = 1.0 + an.cwiseAbs().maxCoeff();
    const auto coords = rng.sample_indices(d, n_coords);
    Vec xp = x, xm = x;
    for (const Index i : coords) {
      xp[i] = x[i] + delta;
      xm[i] = x[i] - delta;
      const double fd = (p.smooth.value(xp) - p.smooth.value(xm)) / (2.0 * delta);
      worst = std::max(worst, std::abs(fd - an[i]) / scale);
      xp[i] = x[i];
      xm[i] = x[i];
    }
  }
  return GradientCheckReport{worst, samples, seed};
}

}  // namespace sr2
