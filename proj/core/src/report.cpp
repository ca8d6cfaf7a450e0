#include "sr2/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <sstream>

namespace sr2 {

namespace {

// 17 significant digits round-trips a double exactly; NaN prints as the
// literal NaN per the CSV contract.
std::string fmt(double v) {
  if (std::isnan(v)) return "NaN";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

void write_trace_csv(std::ostream& os, const std::vector<TraceRecord>& trace) {
  os << "k,f_gap,lyapunov,schedule_residual,eta,bound_sublinear,bound_linear\n";
  for (const TraceRecord& r : trace) {
    os << r.k << ',' << fmt(r.f_gap) << ',' << fmt(r.lyapunov) << ','
       << fmt(r.schedule_residual) << ',' << fmt(r.eta) << ',' << fmt(r.bound_sublinear)
       << ',' << fmt(r.bound_linear) << '\n';
  }
}

std::string format_certificate_line(const Certificate& c) {
  std::ostringstream os;
  os << (c.passed ? "[PASS] " : "[FAIL] ") << c.name
     << " worst_violation=" << fmt(c.worst_violation) << " at=" << fmt(c.location);
  return os.str();
}

void write_gap_svg(std::ostream& os, const std::vector<TraceRecord>& trace,
                   const std::string& title) {
  const double W = 640, H = 420, ml = 70, mr = 20, mt = 40, mb = 50;

  std::vector<std::pair<double, double>> pts;  // (k, log10 gap)
  double min_pos = std::numeric_limits<double>::infinity();
  for (const TraceRecord& r : trace)
    if (std::isfinite(r.f_gap) && r.f_gap > 0.0) min_pos = std::min(min_pos, r.f_gap);
  if (!std::isfinite(min_pos)) min_pos = 1e-16;
  for (const TraceRecord& r : trace) {
    if (!std::isfinite(r.f_gap)) continue;
    const double g = r.f_gap > 0.0 ? r.f_gap : min_pos;
    pts.emplace_back(static_cast<double>(r.k), std::log10(g));
  }

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
     << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
  os << "<rect width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";
  os << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" "
        "font-size=\"15\">"
     << title << "</text>\n";

  if (pts.size() < 2) {
    os << "<text x=\"" << W / 2 << "\" y=\"" << H / 2
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">not enough "
          "positive gap values to plot</text>\n</svg>\n";
    return;
  }

  double kmax = 1, lo = pts[0].second, hi = pts[0].second;
  for (const auto& [k, lg] : pts) {
    kmax = std::max(kmax, k);
    lo = std::min(lo, lg);
    hi = std::max(hi, lg);
  }
  if (hi - lo < 1e-12) hi = lo + 1;
  const double pw = W - ml - mr, ph = H - mt - mb;
  auto X = [&](double k) { return ml + pw * k / kmax; };
  auto Y = [&](double lg) { return mt + ph * (hi - lg) / (hi - lo); };

  os << "<rect x=\"" << ml << "\" y=\"" << mt << "\" width=\"" << pw << "\" height=\"" << ph
     << "\" fill=\"none\" stroke=\"black\"/>\n";
  // y ticks at integer powers of ten
  for (int e = static_cast<int>(std::ceil(lo)); e <= static_cast<int>(std::floor(hi)); ++e) {
    const double y = Y(e);
    os << "<line x1=\"" << ml << "\" y1=\"" << y << "\" x2=\"" << W - mr << "\" y2=\"" << y
       << "\" stroke=\"#dddddd\"/>\n";
    os << "<text x=\"" << ml - 8 << "\" y=\"" << y + 4
       << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">1e" << e
       << "</text>\n";
  }
  for (int i = 0; i <= 4; ++i) {
    const double k = kmax * i / 4.0;
    os << "<text x=\"" << X(k) << "\" y=\"" << H - mb + 18
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
       << static_cast<long>(k) << "</text>\n";
  }
  os << "<text x=\"" << W / 2 << "\" y=\"" << H - 10
     << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">k</text>\n";
  os << "<text x=\"16\" y=\"" << H / 2
     << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" "
        "transform=\"rotate(-90 16 "
     << H / 2 << ")\">f(x_k) - f*</text>\n";

  os << "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" points=\"";
  for (const auto& [k, lg] : pts) os << X(k) << ',' << Y(lg) << ' ';
  os << "\"/>\n</svg>\n";
}

}  // namespace sr2
