#include "sr2/solver.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "sr2/diagnostics.hpp"

namespace sr2 {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

ScheduleParams params_for(const ProblemSpec& p, const SolverConfig& cfg, double L) {
  return make_schedule_params(L, p.smooth.strong_mu, p.nonsmooth.strong_mu, cfg.beta_mode);
}

[[noreturn]] void rethrow_annotated(long k) {
  const std::string tag = "iteration " + std::to_string(k) + ": ";
  try {
    throw;
  } catch (const ill_posed_prox_error& e) {
    throw ill_posed_prox_error(tag + e.what());
  } catch (const numeric_error& e) {
    throw numeric_error(tag + e.what());
  } catch (const invariant_violation_error& e) {
    throw invariant_violation_error(tag + e.what());
  } catch (const divergence_error& e) {
    throw divergence_error(tag + e.what());
  } catch (const backtracking_error& e) {
    throw backtracking_error(tag + e.what());
  }
}

}  // namespace

SolverState make_initial_state(const Vec& x0) {
  SolverState s;
  s.k = 0;
  s.x = x0;
  s.v = x0;  // v_0 = x_0
  s.A = 0.0;
  s.L_current = 0.0;
  return s;
}

SolverState sr2fista_step(const SolverState& state, const ProblemSpec& p,
                          const SolverConfig& cfg, const ScheduleParams& sp,
                          StepDetail* detail) {
  (void)cfg;
  if (state.x.size() != p.dimension)
    throw std::invalid_argument("sr2fista_step: state dimension mismatch");

  const ScheduleState ss = advance_schedule(state.A, sp);
  if (!std::isfinite(ss.A_next))
    throw numeric_error("sr2fista_step: schedule saturated (A_next not finite)");
  const double A = state.A, An = ss.A_next, dA = An - A;
  if (!(dA >= 1.0 / (2.0 * (sp.alpha - sp.beta)))) {
    throw numeric_error("sr2fista_step: A growth " + std::to_string(dA) +
                        " fell under the 1/(2(alpha-beta)) floor");
  }

  const Vec z = state.x + (dA / An) * (state.v - state.x);
  const Vec grad_z = p.smooth.gradient(z);
  const double om = 2.0 * (1.0 + sp.m * A);
  const Vec y = ((A / dA + sp.m * A / om) * state.x + (sp.beta * dA / om) * z + state.v -
                 (dA / om) * grad_z) /
                ss.B_next;
  const double eta = ss.eta_next;
  Vec x_next = p.nonsmooth.prox(y, eta);
  if (!x_next.allFinite())
    throw divergence_error("sr2fista_step: iterate is not finite (step too aggressive?)");
  Vec v_next = x_next + (A / dA) * (x_next - state.x);

  if (detail) {
    detail->z = z;
    detail->y = y;
    detail->eta = eta;
    detail->A_next = An;
    detail->B_next = ss.B_next;
  }

  SolverState out;
  out.k = state.k + 1;
  out.x = std::move(x_next);
  out.v = std::move(v_next);
  out.A = An;
  out.L_current = state.L_current;
  return out;
}

SolverState ista_step(const SolverState& state, const ProblemSpec& p, double eta) {
  if (!(eta > 0.0)) throw std::invalid_argument("ista_step: eta must be positive");
  if (state.x.size() != p.dimension)
    throw std::invalid_argument("ista_step: state dimension mismatch");
  SolverState out = state;
  out.k = state.k + 1;
  out.x = p.nonsmooth.prox(state.x - eta * p.smooth.gradient(state.x), eta);
  if (!out.x.allFinite()) throw divergence_error("ista_step: iterate is not finite");
  out.v = out.x;
  return out;
}

SolverState sr2fista_backtracking_step(const SolverState& state, const ProblemSpec& p,
                                       const SolverConfig& cfg, long* retries,
                                       StepDetail* detail) {
  if (!cfg.backtracking)
    throw std::invalid_argument("sr2fista_backtracking_step: backtracking is not configured");
  const double factor = cfg.backtracking->increase_factor;
  if (!(factor > 1.0))
    throw std::invalid_argument("sr2fista_backtracking_step: increase_factor must exceed 1");

  double L = state.L_current > 0.0 ? state.L_current : cfg.backtracking->initial_L;
  const double mu_g = p.smooth.strong_mu;
  const double mu_h = p.nonsmooth.strong_mu;

  while (true) {
    if (L > 1e15)
      throw backtracking_error("backtracking: L exceeded 1e15 without satisfying smoothness");
    if (!schedule_params_valid(L, mu_g, mu_h, cfg.beta_mode)) {
      // Candidate too small to even form a schedule; treat as a failed try.
      L *= factor;
      if (retries) ++(*retries);
      continue;
    }
    const ScheduleParams sp = params_for(p, cfg, L);
    StepDetail local;
    SolverState candidate = sr2fista_step(state, p, cfg, sp, &local);

    const Vec d = candidate.x - local.z;
    const double g_new = p.smooth.value(candidate.x);
    const double g_z = p.smooth.value(local.z);
    const double decrease = g_new - g_z;
    const double model = p.smooth.gradient(local.z).dot(d) + 0.5 * L * d.squaredNorm();
    const double slack = 1e-12 * (std::abs(g_new) + std::abs(g_z));
    if (decrease <= model + slack) {
      candidate.L_current = L;
      if (detail) *detail = std::move(local);
      return candidate;
    }
    L *= factor;
    if (retries) ++(*retries);
  }
}

SolveResult solve(const ProblemSpec& p, const SolverConfig& cfg, const Vec& x0,
                  Algorithm algorithm) {
  if (x0.size() != p.dimension) throw std::invalid_argument("solve: x0 dimension mismatch");
  if (cfg.max_iters < 0) throw std::invalid_argument("solve: max_iters must be nonnegative");
  if (cfg.trace_every < 1) throw std::invalid_argument("solve: trace_every must be >= 1");
  if (cfg.target_gap && !p.optimum)
    throw std::invalid_argument("solve: target_gap requires a problem with a known optimum");

  const bool backtracking = algorithm == Algorithm::sr2fista && cfg.backtracking.has_value();
  const bool have_opt = p.optimum.has_value();

  SolveResult result;
  result.state = make_initial_state(x0);
  if (backtracking) {
    if (!(cfg.backtracking->increase_factor > 1.0))
      throw std::invalid_argument("solve: backtracking increase_factor must exceed 1");
    if (!(cfg.backtracking->initial_L > 0.0))
      throw std::invalid_argument("solve: backtracking initial_L must be positive");
    // an initial estimate too small to form a valid schedule counts as failed
    double L = cfg.backtracking->initial_L;
    while (!schedule_params_valid(L, p.smooth.strong_mu, p.nonsmooth.strong_mu,
                                  cfg.beta_mode)) {
      if (L > 1e15)
        throw backtracking_error("backtracking: no valid schedule parameters below L = 1e15");
      L *= cfg.backtracking->increase_factor;
      ++result.backtracking_retries;
    }
    result.state.L_current = L;
  }
  result.min_prox_margin = std::numeric_limits<double>::infinity();

  const double L_declared = p.smooth.lipschitz_L;
  const double r0 = have_opt ? (x0 - p.optimum->x_star).squaredNorm() : kNaN;
  const double gap0 = have_opt ? optimal_gap(p, x0) : kNaN;
  const double q_ref = p.mu() / (L_declared + p.nonsmooth.strong_mu);
  const double ista_eta = 1.0 / L_declared;

  auto current_params = [&]() -> ScheduleParams {
    const double L = backtracking ? result.state.L_current : L_declared;
    return params_for(p, cfg, L);
  };

  // One trace row; last_residual/last_eta describe the step that produced x_k.
  auto record = [&](double last_residual, double last_eta) {
    const SolverState& s = result.state;
    TraceRecord r;
    r.k = s.k;
    r.f_gap = have_opt ? optimal_gap(p, s.x) : evaluate_f(p, s.x);
    r.lyapunov = kNaN;
    if (have_opt && algorithm == Algorithm::sr2fista)
      r.lyapunov = lyapunov_discrete(s.x, s.v, s.A, p, current_params());
    r.schedule_residual = last_residual;
    r.eta = last_eta;
    const double k2 = static_cast<double>(s.k) * static_cast<double>(s.k);
    r.bound_sublinear = have_opt ? 2.0 * L_declared * r0 / k2 : kNaN;
    r.bound_linear =
        have_opt ? std::exp(-std::sqrt(2.0 * q_ref) * static_cast<double>(s.k)) * gap0 : kNaN;
    result.trace.push_back(std::move(r));
  };

  auto gap_reached = [&]() {
    if (!cfg.target_gap || !have_opt) return false;
    return result.trace.back().f_gap <= *cfg.target_gap;
  };

  record(kNaN, kNaN);
  if (gap_reached()) {
    result.stop = StopReason::target_gap;
    result.final_L = backtracking ? result.state.L_current : L_declared;
    return result;
  }

  result.stop = StopReason::max_iters;
  double last_residual = kNaN;
  double last_eta = kNaN;
  for (long k = 0; k < cfg.max_iters; ++k) {
    last_residual = kNaN;
    last_eta = kNaN;
    try {
      if (algorithm == Algorithm::ista) {
        result.state = ista_step(result.state, p, ista_eta);
        last_eta = ista_eta;
      } else {
        const ScheduleParams sp = current_params();
        const double A_next_probe = advance_A(result.state.A, sp);
        if (!std::isfinite(A_next_probe)) {
          result.stop = StopReason::schedule_saturated;
          break;
        }
        StepDetail detail;
        const double A_prev = result.state.A;
        if (backtracking) {
          result.state = sr2fista_backtracking_step(result.state, p, cfg,
                                                    &result.backtracking_retries, &detail);
        } else {
          result.state = sr2fista_step(result.state, p, cfg, sp, &detail);
        }
        const ScheduleParams sp_used = current_params();
        last_residual = std::abs(schedule_residual(A_prev, detail.A_next, sp_used));
        last_eta = detail.eta;
        result.min_prox_margin = std::min(
            result.min_prox_margin, 2.0 + sp_used.m * (A_prev + detail.A_next));
      }
    } catch (...) {
      rethrow_annotated(k);
    }

    const bool at_trace_point = (result.state.k % cfg.trace_every) == 0;
    const bool is_last = k + 1 == cfg.max_iters;
    if (at_trace_point || is_last) {
      record(last_residual, last_eta);
      if (gap_reached()) {
        result.stop = StopReason::target_gap;
        break;
      }
    }
  }
  if (result.trace.back().k != result.state.k) record(last_residual, last_eta);

  result.final_L = backtracking ? result.state.L_current : L_declared;
  return result;
}

}  // namespace sr2
