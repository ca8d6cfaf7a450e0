#pragma once

#include "sr2/types.hpp"

namespace sr2 {

/// Minimax concave penalty parameters (lambda > 0, gamma > 1). The penalty is
/// 1/gamma-weakly convex per coordinate, i.e. mu_h = -1/gamma.
struct McpParams {
  McpParams(double lambda_, double gamma_);
  double lambda;
  double gamma;
};

/// SCAD parameters (lambda > 0, a > 2); mu_h = -1/(a - 1).
struct ScadParams {
  ScadParams(double lambda_, double a_);
  double lambda;
  double a;
};

double mcp_value(double x, const McpParams& p);
double scad_value(double x, const ScadParams& p);

// Scalar proximal maps. The MCP/SCAD ones throw ill_posed_prox_error as soon
// as eta reaches the weak-convexity limit (eta >= gamma resp. eta >= a - 1);
// past that point the subproblem has no unique minimizer and a silently
// returned stationary point would be undebuggable.
double prox_l1_scalar(double x, double eta, double lambda);
double prox_mcp_scalar(double x, double eta, const McpParams& p);
double prox_scad_scalar(double x, double eta, const ScadParams& p);

// Componentwise vector versions.
Vec prox_l1(const Vec& x, double eta, double lambda);
Vec prox_mcp(const Vec& x, double eta, const McpParams& p);
Vec prox_scad(const Vec& x, double eta, const ScadParams& p);

/// Projection onto the box [lo, hi]; independent of eta.
Vec prox_box(const Vec& x, double eta, const Vec& lo, const Vec& hi);

}  // namespace sr2
