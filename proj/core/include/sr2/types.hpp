#pragma once

#include <Eigen/Core>
#include <stdexcept>
#include <string>

namespace sr2 {

using Vec = Eigen::VectorXd;
using Index = Eigen::Index;

// Raised when a proximal subproblem is queried outside its strong-convexity
// range (eta >= -1/mu_h for a weakly convex h).
class ill_posed_prox_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a numeric quantity leaves its valid range (negative schedule
// discriminant, non-positive B, ...). Usually indicates corrupted parameters.
class numeric_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when a condition the theory guarantees fails anyway.
class invariant_violation_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Raised when an iterate stops being finite.
class divergence_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Raised when backtracking cannot find a workable Lipschitz estimate.
class backtracking_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace sr2
