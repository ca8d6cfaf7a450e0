#pragma once

#include <optional>
#include <vector>

#include "sr2/problem.hpp"
#include "sr2/schedule.hpp"
#include "sr2/types.hpp"

namespace sr2 {

enum class Algorithm { sr2fista, ista };

struct BacktrackingConfig {
  double initial_L = 1.0;
  double increase_factor = 2.0;
};

struct SolverConfig {
  BetaMode beta_mode = BetaMode::compromised;
  long max_iters = 1000;
  std::optional<double> target_gap;  // requires a known optimum
  std::optional<BacktrackingConfig> backtracking;
  long trace_every = 1;
};

struct SolverState {
  long k = 0;
  Vec x;
  Vec v;
  double A = 0.0;
  double L_current = 0.0;  // backtracking only
};

/// Transients of one step, exposed for certificate checks and tests.
struct StepDetail {
  Vec z;
  Vec y;           // prox input of the step
  double eta = 0;  // prox step length
  double A_next = 0;
  double B_next = 0;
};

/// One row of the convergence log. Unavailable fields are NaN.
struct TraceRecord {
  long k = 0;
  double f_gap = 0.0;              // f(x_k) - f* when known, else raw f(x_k)
  double lyapunov = 0.0;           // E_k, needs a known optimum
  double schedule_residual = 0.0;  // normalized |equality residual| of the step into k
  double eta = 0.0;                // prox step used by the step into k
  double bound_sublinear = 0.0;    // 2 L_g |x0 - x*|^2 / k^2
  double bound_linear = 0.0;       // exp(-sqrt(2q) k) (f(x0) - f*), q = mu/(L_g + mu_h)
};

enum class StopReason { max_iters, target_gap, schedule_saturated };

struct SolveResult {
  SolverState state;
  std::vector<TraceRecord> trace;
  StopReason stop = StopReason::max_iters;
  long backtracking_retries = 0;
  double final_L = 0.0;
  double min_prox_margin = 0.0;  // min over steps of 2 + m (A_k + A_{k+1})
};

SolverState make_initial_state(const Vec& x0);

/// One iteration of the accelerated forward-backward scheme: advance the
/// schedule, form z_k and the prox input y_{k+1}, apply prox_{eta h}, update
/// the momentum point v_{k+1}.
SolverState sr2fista_step(const SolverState& state, const ProblemSpec& p,
                          const SolverConfig& cfg, const ScheduleParams& sp,
                          StepDetail* detail = nullptr);

/// Plain forward-backward step x+ = prox_{eta h}(x - eta grad g(x)).
SolverState ista_step(const SolverState& state, const ProblemSpec& p, double eta);

/// sr2fista_step with increase-only adaptation of the Lipschitz estimate:
/// retries the same iteration with L *= increase_factor until
///   g(x+) - g(z) <= <grad g(z), x+ - z> + L/2 |x+ - z|^2
/// holds (candidate L values that cannot form valid schedule parameters count
/// as failed). beta is recomputed from the current L in compromised mode so
/// the Lyapunov certificate stays valid for the accepted L. L never
/// decreases; L > 1e15 throws backtracking_error.
SolverState sr2fista_backtracking_step(const SolverState& state, const ProblemSpec& p,
                                       const SolverConfig& cfg, long* retries = nullptr,
                                       StepDetail* detail = nullptr);

/// Driver loop. Stops on max_iters, on f(x_k) - f* <= target_gap (checked at
/// trace points, before the iteration-count check), or when the A_k schedule
/// saturates in floating point. The objective is evaluated only at trace
/// points. Deterministic. Step errors are rethrown annotated with the
/// iteration index.
SolveResult solve(const ProblemSpec& p, const SolverConfig& cfg, const Vec& x0,
                  Algorithm algorithm);

}  // namespace sr2
