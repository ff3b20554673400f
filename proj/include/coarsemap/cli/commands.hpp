#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "coarsemap/analysis/persistence.hpp"
#include "coarsemap/decay_matrix.hpp"
#include "coarsemap/growth.hpp"

namespace coarsemap::cli {

/// Runs the tool on its arguments (program name excluded) and returns the
/// exit code: 0 success, 1 usage, 2 data, 3 numeric non-convergence.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "a:b:steps" (linear, both ends included) or "auto": the filtration
/// thresholds above zero_tol, thinned to at most 64 evenly spaced entries,
/// or {1, 0.1, 0.01, 0.001} when no entry exceeds zero_tol. Returned in
/// strictly decreasing order.
std::vector<double> parse_eps_grid(std::string_view spec, const DecayMatrix& f, double zero_tol);

/// "lo:hi" with 0 < lo < hi < 1.
Window parse_window(std::string_view spec);

/// "1:4,2:6,...".
std::vector<analysis::RadiusWindow> parse_radius_windows(std::string_view spec);

/// Largest threshold above zero_tol whose eps-graph is connected; the
/// smallest such threshold if none is, 1 when f has no entry above zero_tol.
double default_epsilon(const DecayMatrix& f, double zero_tol);

/// Scales at which two matrices can be compared without touching a value of
/// either: geometric midpoints between consecutive distinct thresholds
/// (values within 1e-9 relative count as one), plus half the smallest.
std::vector<double> probe_epsilons(const DecayMatrix& f, const DecayMatrix& g, double zero_tol);

}  // namespace coarsemap::cli
