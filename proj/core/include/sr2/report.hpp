#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sr2/diagnostics.hpp"
#include "sr2/solver.hpp"

namespace sr2 {

/// Trace CSV: header row
///   k,f_gap,lyapunov,schedule_residual,eta,bound_sublinear,bound_linear
/// then one row per record. Reals are printed with 17 significant digits;
/// unavailable fields as the literal NaN. Byte-deterministic for a fixed
/// trace.
void write_trace_csv(std::ostream& os, const std::vector<TraceRecord>& trace);

std::string format_certificate_line(const Certificate& c);

/// Minimal static SVG line chart of log10(f_gap) against k. Non-positive
/// gaps are clipped to the smallest positive value in the series.
void write_gap_svg(std::ostream& os, const std::vector<TraceRecord>& trace,
                   const std::string& title);

}  // namespace sr2
