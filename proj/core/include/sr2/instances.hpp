#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "sr2/problem.hpp"
#include "sr2/types.hpp"

namespace sr2 {

/// Separable regularizer attached to a diagonal-quadratic benchmark problem.
struct Regularizer {
  enum class Kind { none, l1, mcp, scad, box };
  Kind kind = Kind::none;
  double lambda = 1.0;
  double mcp_gamma = 3.0;
  double scad_a = 3.7;
  Vec box_lo, box_hi;
};

/// Benchmark problem g(x) = 1/2 sum_i w_i (x_i - c_i)^2 plus a separable
/// regularizer. L_g = max w, mu_g = min w. The exact minimizer is computed
/// coordinatewise through the scalar prox, so every instance ships with a
/// usable optimum.
ProblemSpec make_diag_quadratic(const Vec& weights, const Vec& centers,
                                const Regularizer& reg);

/// The d = 10000 synthetic instance: two 5000-blocks of a diagonal quadratic
/// with weights 1..5000, centers 10 and 1e-4, under a componentwise MCP
/// penalty with (lambda, gamma) = (2, 3). Constants L_g = 5000, mu_g = 1,
/// mu_h = -1/3; minimizer (10,...,10, 0,...,0).
ProblemSpec build_paper6();

/// d = 10 ill-conditioned diagonal quadratics (weights log-spaced 1..1e4)
/// with seeded centers, under l1 (lambda = 0.5) resp. MCP (0.5, 3).
ProblemSpec build_quadratic_l1(std::uint64_t seed);
ProblemSpec build_quadratic_mcp(std::uint64_t seed);

struct DiagQuadData {
  Vec weights;
  Vec centers;
};

/// Reads a headered CSV with columns weight,center.
DiagQuadData load_diag_quadratic_csv(std::istream& in);
DiagQuadData load_diag_quadratic_csv(const std::string& path);

}  // namespace sr2
