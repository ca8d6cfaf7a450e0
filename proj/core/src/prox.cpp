#include "sr2/prox.hpp"

#include <cmath>
#include <string>

namespace sr2 {

McpParams::McpParams(double lambda_, double gamma_) : lambda(lambda_), gamma(gamma_) {
  if (!(lambda > 0.0)) throw std::invalid_argument("McpParams: lambda must be positive");
  if (!(gamma > 1.0)) throw std::invalid_argument("McpParams: gamma must exceed 1");
}

ScadParams::ScadParams(double lambda_, double a_) : lambda(lambda_), a(a_) {
  if (!(lambda > 0.0)) throw std::invalid_argument("ScadParams: lambda must be positive");
  if (!(a > 2.0)) throw std::invalid_argument("ScadParams: a must exceed 2");
}

double mcp_value(double x, const McpParams& p) {
  const double ax = std::abs(x);
  if (ax <= p.gamma * p.lambda) return p.lambda * ax - x * x / (2.0 * p.gamma);
  return 0.5 * p.gamma * p.lambda * p.lambda;
}

double scad_value(double x, const ScadParams& p) {
  const double ax = std::abs(x);
  if (ax <= p.lambda) return p.lambda * ax;
  if (ax <= p.a * p.lambda)
    return (-x * x + 2.0 * p.a * p.lambda * ax - p.lambda * p.lambda) / (2.0 * (p.a - 1.0));
  return 0.5 * (p.a + 1.0) * p.lambda * p.lambda;
}

double prox_l1_scalar(double x, double eta, double lambda) {
  const double t = eta * lambda;
  if (x > t) return x - t;
  if (x < -t) return x + t;
  return 0.0;
}

namespace {

void require_positive_eta(double eta, const char* who) {
  if (!(eta > 0.0)) throw std::invalid_argument(std::string(who) + ": eta must be positive");
}

}  // namespace

// Firm thresholding: the exact minimizer of eta*MCP(u) + 1/2 (u - x)^2, which
// is strongly convex precisely when eta < gamma.
double prox_mcp_scalar(double x, double eta, const McpParams& p) {
  require_positive_eta(eta, "prox_mcp");
  if (eta >= p.gamma) {
    throw ill_posed_prox_error("prox_mcp: eta = " + std::to_string(eta) +
                               " >= gamma = " + std::to_string(p.gamma) +
                               " (eta must stay below -1/mu_h)");
  }
  const double s = std::abs(x);
  if (s <= eta * p.lambda) return 0.0;
  if (s <= p.gamma * p.lambda)
    return std::copysign(p.gamma * (s - eta * p.lambda) / (p.gamma - eta), x);
  return x;
}

double prox_scad_scalar(double x, double eta, const ScadParams& p) {
  require_positive_eta(eta, "prox_scad");
  if (eta >= p.a - 1.0) {
    throw ill_posed_prox_error("prox_scad: eta = " + std::to_string(eta) +
                               " >= a - 1 = " + std::to_string(p.a - 1.0) +
                               " (eta must stay below -1/mu_h)");
  }
  const double s = std::abs(x);
  if (s <= eta * p.lambda) return 0.0;
  if (s <= (1.0 + eta) * p.lambda) return std::copysign(s - eta * p.lambda, x);
  if (s <= p.a * p.lambda)
    return std::copysign(((p.a - 1.0) * s - eta * p.a * p.lambda) / (p.a - 1.0 - eta), x);
  return x;
}

Vec prox_l1(const Vec& x, double eta, double lambda) {
  require_positive_eta(eta, "prox_l1");
  if (!(lambda > 0.0)) throw std::invalid_argument("prox_l1: lambda must be positive");
  Vec out(x.size());
  for (Index i = 0; i < x.size(); ++i) out[i] = prox_l1_scalar(x[i], eta, lambda);
  return out;
}

Vec prox_mcp(const Vec& x, double eta, const McpParams& p) {
  require_positive_eta(eta, "prox_mcp");
  if (eta >= p.gamma) {
    throw ill_posed_prox_error("prox_mcp: eta = " + std::to_string(eta) +
                               " >= gamma = " + std::to_string(p.gamma));
  }
  Vec out(x.size());
  for (Index i = 0; i < x.size(); ++i) out[i] = prox_mcp_scalar(x[i], eta, p);
  return out;
}

Vec prox_scad(const Vec& x, double eta, const ScadParams& p) {
  require_positive_eta(eta, "prox_scad");
  if (eta >= p.a - 1.0) {
    throw ill_posed_prox_error("prox_scad: eta = " + std::to_string(eta) +
                               " >= a - 1 = " + std::to_string(p.a - 1.0));
  }
  Vec out(x.size());
  for (Index i = 0; i < x.size(); ++i) out[i] = prox_scad_scalar(x[i], eta, p);
  return out;
}

Vec prox_box(const Vec& x, double eta, const Vec& lo, const Vec& hi) {
  (void)eta;  // projection does not depend on the step
  if (lo.size() != x.size() || hi.size() != x.size())
    throw std::invalid_argument("prox_box: bound lengths do not match the point");
  for (Index i = 0; i < x.size(); ++i) {
    if (lo[i] > hi[i])
      throw std::invalid_argument("prox_box: lo > hi at coordinate " + std::to_string(i));
  }
  return x.cwiseMax(lo).cwiseMin(hi);
}

}  // namespace sr2
