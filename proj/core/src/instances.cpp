#include "sr2/instances.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <limits>
#include <memory>
#include <sstream>
#include <vector>

#include "sr2/detail/rng.hpp"
#include "sr2/prox.hpp"

namespace sr2 {

namespace {

double regularizer_mu(const Regularizer& reg) {
  switch (reg.kind) {
    case Regularizer::Kind::mcp:
      return -1.0 / reg.mcp_gamma;
    case Regularizer::Kind::scad:
      return -1.0 / (reg.scad_a - 1.0);
    default:
      return 0.0;
  }
}

double regularizer_value(const Regularizer& reg, const Vec& x) {
  switch (reg.kind) {
    case Regularizer::Kind::none:
      return 0.0;
    case Regularizer::Kind::l1:
      return reg.lambda * x.cwiseAbs().sum();
    case Regularizer::Kind::mcp: {
      const McpParams p(reg.lambda, reg.mcp_gamma);
      double s = 0.0;
      for (Index i = 0; i < x.size(); ++i) s += mcp_value(x[i], p);
      return s;
    }
    case Regularizer::Kind::scad: {
      const ScadParams p(reg.lambda, reg.scad_a);
      double s = 0.0;
      for (Index i = 0; i < x.size(); ++i) s += scad_value(x[i], p);
      return s;
    }
    case Regularizer::Kind::box:
      for (Index i = 0; i < x.size(); ++i) {
        if (x[i] < reg.box_lo[i] || x[i] > reg.box_hi[i])
          return std::numeric_limits<double>::infinity();
      }
      return 0.0;
  }
  return 0.0;
}

Vec regularizer_prox(const Regularizer& reg, const Vec& x, double eta) {
  switch (reg.kind) {
    case Regularizer::Kind::none:
      return x;
    case Regularizer::Kind::l1:
      return prox_l1(x, eta, reg.lambda);
    case Regularizer::Kind::mcp:
      return prox_mcp(x, eta, McpParams(reg.lambda, reg.mcp_gamma));
    case Regularizer::Kind::scad:
      return prox_scad(x, eta, ScadParams(reg.lambda, reg.scad_a));
    case Regularizer::Kind::box:
      return prox_box(x, eta, reg.box_lo, reg.box_hi);
  }
  return x;
}

}  // namespace

ProblemSpec make_diag_quadratic(const Vec& weights, const Vec& centers,
                                const Regularizer& reg) {
  if (weights.size() != centers.size() || weights.size() == 0)
    throw std::invalid_argument("make_diag_quadratic: weights/centers size mismatch");
  if (weights.minCoeff() <= 0.0)
    throw std::invalid_argument("make_diag_quadratic: weights must be positive");
  if (reg.kind == Regularizer::Kind::box &&
      (reg.box_lo.size() != weights.size() || reg.box_hi.size() != weights.size()))
    throw std::invalid_argument("make_diag_quadratic: box bounds size mismatch");

  struct Data {
    Vec w, c;
    Regularizer reg;
  };
  auto data = std::make_shared<const Data>(Data{weights, centers, reg});

  SmoothOracle g;
  g.value = [data](const Vec& x) {
    return 0.5 * (data->w.array() * (x - data->c).array().square()).sum();
  };
  g.gradient = [data](const Vec& x) { return Vec(data->w.array() * (x - data->c).array()); };
  g.lipschitz_L = weights.maxCoeff();
  g.strong_mu = weights.minCoeff();

  ProxOracle h;
  h.value = [data](const Vec& x) { return regularizer_value(data->reg, x); };
  h.prox = [data](const Vec& x, double eta) { return regularizer_prox(data->reg, x, eta); };
  h.strong_mu = regularizer_mu(reg);

  // Separable objective: the minimizer solves min_u w/2 (u-c)^2 + h(u) per
  // coordinate, i.e. x*_i = prox_{h/w_i}(c_i). Well-posed since 1/w < -1/mu_h
  // for all our weights.
  Optimum opt;
  opt.x_star = Vec(weights.size());
  for (Index i = 0; i < weights.size(); ++i) {
    Vec ci(1), lo(1), hi(1);
    ci[0] = centers[i];
    Regularizer ri = reg;
    if (reg.kind == Regularizer::Kind::box) {
      lo[0] = reg.box_lo[i];
      hi[0] = reg.box_hi[i];
      ri.box_lo = lo;
      ri.box_hi = hi;
    }
    opt.x_star[i] = regularizer_prox(ri, ci, 1.0 / weights[i])[0];
  }
  opt.f_star = g.value(opt.x_star) + h.value(opt.x_star);

  return make_problem(std::move(g), std::move(h), weights.size(), std::move(opt));
}

ProblemSpec build_paper6() {
  const Index half = 5000;
  const Index d = 2 * half;
  struct Data {
    Vec w, c;
    McpParams mcp{2.0, 3.0};
  };
  Data init;
  init.w.resize(d);
  init.c.resize(d);
  for (Index i = 0; i < half; ++i) {
    init.w[i] = static_cast<double>(i + 1);
    init.w[half + i] = static_cast<double>(i + 1);
    init.c[i] = 10.0;
    init.c[half + i] = 1e-4;
  }
  auto data = std::make_shared<const Data>(std::move(init));

  SmoothOracle g;
  g.value = [data](const Vec& x) {
    return 0.5 * (data->w.array() * (x - data->c).array().square()).sum();
  };
  g.gradient = [data](const Vec& x) { return Vec(data->w.array() * (x - data->c).array()); };
  g.lipschitz_L = 5000.0;
  g.strong_mu = 1.0;

  ProxOracle h;
  h.value = [data](const Vec& x) {
    double s = 0.0;
    for (Index i = 0; i < x.size(); ++i) s += mcp_value(x[i], data->mcp);
    return s;
  };
  h.prox = [data](const Vec& x, double eta) { return prox_mcp(x, eta, data->mcp); };
  h.strong_mu = -1.0 / 3.0;

  Optimum opt;
  opt.x_star = Vec::Zero(d);
  opt.x_star.head(half).setConstant(10.0);
  opt.f_star = g.value(opt.x_star) + h.value(opt.x_star);

  return make_problem(std::move(g), std::move(h), d, std::move(opt));
}

namespace {

ProblemSpec build_quadratic_instance(std::uint64_t seed, const Regularizer& reg) {
  const Index d = 10;
  Vec w(d), c(d);
  for (Index i = 0; i < d; ++i)
    w[i] = std::pow(10.0, 4.0 * static_cast<double>(i) / static_cast<double>(d - 1));
  detail::Rng rng(seed);
  for (Index i = 0; i < d; ++i) c[i] = rng.uniform(-2.0, 2.0);
  return make_diag_quadratic(w, c, reg);
}

}  // namespace

ProblemSpec build_quadratic_l1(std::uint64_t seed) {
  Regularizer reg;
  reg.kind = Regularizer::Kind::l1;
  reg.lambda = 0.5;
  return build_quadratic_instance(seed, reg);
}

ProblemSpec build_quadratic_mcp(std::uint64_t seed) {
  Regularizer reg;
  reg.kind = Regularizer::Kind::mcp;
  reg.lambda = 0.5;
  reg.mcp_gamma = 3.0;
  return build_quadratic_instance(seed, reg);
}

DiagQuadData load_diag_quadratic_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line))
    throw std::invalid_argument("diag quadratic csv: missing header");
  // tolerate \r\n and surrounding spaces in the header
  auto squeeze = [](std::string s) {
    std::string out;
    for (char ch : s)
      if (!std::isspace(static_cast<unsigned char>(ch))) out += ch;
    return out;
  };
  if (squeeze(line) != "weight,center")
    throw std::invalid_argument("diag quadratic csv: header must be 'weight,center'");

  std::vector<double> ws, cs;
  std::size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (squeeze(line).empty()) continue;
    std::istringstream row(line);
    std::string field;
    double vals[2];
    for (int j = 0; j < 2; ++j) {
      if (!std::getline(row, field, ','))
        throw std::invalid_argument("diag quadratic csv: short row at line " +
                                    std::to_string(lineno));
      try {
        vals[j] = std::stod(field);
      } catch (const std::exception&) {
        throw std::invalid_argument("diag quadratic csv: bad number at line " +
                                    std::to_string(lineno));
      }
    }
    ws.push_back(vals[0]);
    cs.push_back(vals[1]);
  }
  if (ws.empty()) throw std::invalid_argument("diag quadratic csv: no data rows");
  DiagQuadData out;
  out.weights = Eigen::Map<const Vec>(ws.data(), static_cast<Index>(ws.size()));
  out.centers = Eigen::Map<const Vec>(cs.data(), static_cast<Index>(cs.size()));
  return out;
}

DiagQuadData load_diag_quadratic_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open problem file: " + path);
  return load_diag_quadratic_csv(in);
}

}  // namespace sr2
