// Benchmark harness: builds a composite test problem, runs the accelerated
// forward-backward solver and/or plain forward-backward, writes CSV traces
// (and optional SVG plots), and verifies the convergence certificates. Exit
// code 0 means every certificate passed.

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sr2/diagnostics.hpp"
#include "sr2/instances.hpp"
#include "sr2/report.hpp"
#include "sr2/solver.hpp"

namespace {

struct BenchConfig {
  std::string problem = "paper6";
  std::string problem_file;
  std::string regularizer = "l1";
  double lambda = 1.0;
  double mcp_gamma = 3.0;
  double scad_a = 3.7;
  double box_lo = 0.0;
  double box_hi = 1.0;
  std::string algorithm = "sr2fista";
  sr2::BetaMode beta_mode = sr2::BetaMode::compromised;
  long max_iters = 2000;
  std::uint64_t seed = 0;
  std::string out_dir = ".";
  bool plot = false;
  long trace_every = 1;
  std::string backtracking;  // "L0,FACTOR"
};

sr2::ProblemSpec build_problem(const BenchConfig& cfg) {
  if (cfg.problem == "paper6") return sr2::build_paper6();
  if (cfg.problem == "quadratic_l1") return sr2::build_quadratic_l1(cfg.seed);
  if (cfg.problem == "quadratic_mcp") return sr2::build_quadratic_mcp(cfg.seed);
  // custom: diagonal quadratic from file + regularizer from flags
  const sr2::DiagQuadData data = sr2::load_diag_quadratic_csv(cfg.problem_file);
  sr2::Regularizer reg;
  if (cfg.regularizer == "none")
    reg.kind = sr2::Regularizer::Kind::none;
  else if (cfg.regularizer == "l1")
    reg.kind = sr2::Regularizer::Kind::l1;
  else if (cfg.regularizer == "mcp")
    reg.kind = sr2::Regularizer::Kind::mcp;
  else if (cfg.regularizer == "scad")
    reg.kind = sr2::Regularizer::Kind::scad;
  else if (cfg.regularizer == "box")
    reg.kind = sr2::Regularizer::Kind::box;
  else
    throw std::invalid_argument("unknown regularizer: " + cfg.regularizer);
  reg.lambda = cfg.lambda;
  reg.mcp_gamma = cfg.mcp_gamma;
  reg.scad_a = cfg.scad_a;
  if (reg.kind == sr2::Regularizer::Kind::box) {
    reg.box_lo = sr2::Vec::Constant(data.weights.size(), cfg.box_lo);
    reg.box_hi = sr2::Vec::Constant(data.weights.size(), cfg.box_hi);
  }
  return sr2::make_diag_quadratic(data.weights, data.centers, reg);
}

std::vector<sr2::Certificate> run_certificates(const sr2::ProblemSpec& p,
                                               const sr2::SolveResult& res,
                                               sr2::Algorithm algo, std::uint64_t seed) {
  std::vector<sr2::Certificate> certs;

  // Lyapunov monotonicity along the trace (Theorem-level check).
  if (p.optimum && algo == sr2::Algorithm::sr2fista) {
    sr2::Certificate c;
    c.name = "lyapunov_monotone";
    c.passed = true;
    c.worst_violation = 0.0;
    const auto& tr = res.trace;
    const double tol = tr.empty() ? 1e-9 : 1e-9 * std::max(1.0, tr.front().lyapunov);
    for (std::size_t i = 0; i + 1 < tr.size(); ++i) {
      const double d = tr[i + 1].lyapunov - tr[i].lyapunov;
      if (d > c.worst_violation) {
        c.worst_violation = d;
        c.location = static_cast<double>(tr[i + 1].k);
      }
    }
    c.passed = c.worst_violation <= tol;
    certs.push_back(c);
  }

  // Step-condition equality residuals recorded along the run.
  if (algo == sr2::Algorithm::sr2fista) {
    sr2::Certificate c;
    c.name = "schedule_equality";
    c.passed = true;
    c.worst_violation = 0.0;
    for (const auto& r : res.trace) {
      if (std::isnan(r.schedule_residual)) continue;
      if (r.schedule_residual > c.worst_violation) {
        c.worst_violation = r.schedule_residual;
        c.location = static_cast<double>(r.k);
      }
    }
    c.passed = c.worst_violation <= 1e-9;
    certs.push_back(c);

    sr2::Certificate pw;
    pw.name = "prox_well_defined";
    pw.worst_violation = -res.min_prox_margin;  // 2 + m(A_k + A_{k+1}) must stay positive
    pw.passed = res.min_prox_margin > 0.0;
    certs.push_back(pw);
  } else {
    sr2::Certificate pw;
    pw.name = "prox_well_defined";
    const double eta = 1.0 / p.smooth.lipschitz_L;
    const double mu_h = p.nonsmooth.strong_mu;
    const bool ok = mu_h >= 0.0 || eta < -1.0 / mu_h;
    pw.passed = ok;
    pw.worst_violation = ok ? 0.0 : eta + 1.0 / mu_h;
    certs.push_back(pw);
  }

  // Two-point gradient-surrogate inequality on sampled triples.
  const sr2::ScheduleParams abg = sr2::make_schedule_params(
      p.smooth.lipschitz_L, p.smooth.strong_mu, p.nonsmooth.strong_mu, sr2::BetaMode::plain);
  const double mu_h = p.nonsmooth.strong_mu;
  const double eta_max = mu_h < 0.0 ? 0.97 * (-1.0 / mu_h) : 2.0;
  certs.push_back(sr2::sample_wdg_certificate(p, abg, 1000, seed + 1, 12.0, eta_max));

  return certs;
}

int run_benchmark(const BenchConfig& cfg) {
  const sr2::ProblemSpec p = build_problem(cfg);

  sr2::SolverConfig scfg;
  scfg.beta_mode = cfg.beta_mode;
  scfg.max_iters = cfg.max_iters;
  scfg.trace_every = cfg.trace_every;
  if (!cfg.backtracking.empty()) {
    std::istringstream bt(cfg.backtracking);
    std::string a, b;
    if (!std::getline(bt, a, ',') || !std::getline(bt, b))
      throw std::invalid_argument("--backtracking expects L0,FACTOR");
    scfg.backtracking = sr2::BacktrackingConfig{std::stod(a), std::stod(b)};
  }

  std::vector<sr2::Algorithm> algos;
  if (cfg.algorithm == "sr2fista" || cfg.algorithm == "both")
    algos.push_back(sr2::Algorithm::sr2fista);
  if (cfg.algorithm == "ista" || cfg.algorithm == "both")
    algos.push_back(sr2::Algorithm::ista);
  if (algos.empty()) throw std::invalid_argument("unknown algorithm: " + cfg.algorithm);

  std::filesystem::create_directories(cfg.out_dir);
  const sr2::Vec x0 = sr2::Vec::Ones(p.dimension);

  bool all_passed = true;
  for (const sr2::Algorithm algo : algos) {
    const std::string algo_name = algo == sr2::Algorithm::sr2fista ? "sr2fista" : "ista";
    const sr2::SolveResult res = sr2::solve(p, scfg, x0, algo);

    const std::string stem = cfg.problem + "_" + algo_name;
    const std::string csv_path = cfg.out_dir + "/" + stem + ".csv";
    std::ofstream csv(csv_path, std::ios::binary);
    if (!csv) throw std::runtime_error("cannot open output file: " + csv_path);
    sr2::write_trace_csv(csv, res.trace);
    csv.flush();
    if (!csv) throw std::runtime_error("write failed: " + csv_path);

    if (cfg.plot) {
      const std::string svg_path = cfg.out_dir + "/" + stem + ".svg";
      std::ofstream svg(svg_path, std::ios::binary);
      if (!svg) throw std::runtime_error("cannot open output file: " + svg_path);
      sr2::write_gap_svg(svg, res.trace, stem);
      svg.flush();
      if (!svg) throw std::runtime_error("write failed: " + svg_path);
    }

    std::cout << stem << ": iterations=" << res.state.k << " stop="
              << (res.stop == sr2::StopReason::max_iters          ? "max_iters"
                  : res.stop == sr2::StopReason::target_gap       ? "target_gap"
                                                                  : "schedule_saturated")
              << " final_gap=" << res.trace.back().f_gap;
    if (scfg.backtracking && algo == sr2::Algorithm::sr2fista)
      std::cout << " final_L=" << res.final_L << " retries=" << res.backtracking_retries;
    std::cout << '\n';

    for (const sr2::Certificate& c : run_certificates(p, res, algo, cfg.seed)) {
      std::cout << "  " << sr2::format_certificate_line(c) << '\n';
      if (!c.passed) {
        all_passed = false;
        std::cerr << stem << ": certificate failed: " << sr2::format_certificate_line(c)
                  << '\n';
      }
    }
  }
  return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "sr2bench - accelerated forward-backward benchmark harness.\n"
      "Writes one CSV per (problem, algorithm) with columns\n"
      "  k,f_gap,lyapunov,schedule_residual,eta,bound_sublinear,bound_linear\n"
      "(17 significant digits; NaN marks unavailable fields; bound_sublinear is\n"
      "2 L |x0-x*|^2 / k^2, bound_linear is exp(-sqrt(2q) k) (f(x0)-f*) with\n"
      "q = mu/(L+mu_h)). Exit code 0 iff all convergence certificates pass."};

  BenchConfig cfg;
  app.add_option("--problem", cfg.problem, "paper6|quadratic_l1|quadratic_mcp|custom")
      ->check(CLI::IsMember({"paper6", "quadratic_l1", "quadratic_mcp", "custom"}));
  app.add_option("--problem-file", cfg.problem_file,
                 "headered CSV 'weight,center' for --problem custom");
  app.add_option("--regularizer", cfg.regularizer, "custom problems: none|l1|mcp|scad|box");
  app.add_option("--lambda", cfg.lambda, "regularizer strength (custom)");
  app.add_option("--mcp-gamma", cfg.mcp_gamma, "MCP gamma (custom)");
  app.add_option("--scad-a", cfg.scad_a, "SCAD a (custom)");
  app.add_option("--box-lo", cfg.box_lo, "box lower bound (custom)");
  app.add_option("--box-hi", cfg.box_hi, "box upper bound (custom)");
  app.add_option("--algorithm", cfg.algorithm, "sr2fista|ista|both")
      ->check(CLI::IsMember({"sr2fista", "ista", "both"}));
  std::string beta_mode = "compromised";
  app.add_option("--beta-mode", beta_mode, "compromised|plain")
      ->check(CLI::IsMember({"compromised", "plain"}));
  app.add_option("--max-iters", cfg.max_iters, "iteration budget")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "seed for problem generation and certificate sampling");
  app.add_option("--out", cfg.out_dir, "output directory");
  app.add_flag("--plot", cfg.plot, "also write a log-scale SVG gap plot per run");
  app.add_option("--trace-every", cfg.trace_every, "trace sampling stride")
      ->check(CLI::PositiveNumber);
  app.add_option("--backtracking", cfg.backtracking,
                 "L0,FACTOR enables increase-only Lipschitz adaptation");

  CLI11_PARSE(app, argc, argv);
  cfg.beta_mode = beta_mode == "plain" ? sr2::BetaMode::plain : sr2::BetaMode::compromised;

  if (cfg.problem == "custom" && cfg.problem_file.empty()) {
    std::cerr << "error: --problem custom requires --problem-file\n";
    return 2;
  }

  try {
    return run_benchmark(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
