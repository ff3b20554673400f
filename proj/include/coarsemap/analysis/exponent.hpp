#pragma once

#include <cstddef>

#include "coarsemap/decay_matrix.hpp"
#include "coarsemap/growth.hpp"
#include "coarsemap/path_metric.hpp"

namespace coarsemap::analysis {

struct ExponentFit {
  double gamma = 0.0;
  double std_error = 0.0;
  /// s in log f = a - gamma log(d + s).
  double shift = 0.0;
  bool shift_at_bound = false;
  double r2 = 0.0;
  Distance window_lo = 0;
  Distance window_hi = 0;
  std::size_t n_pairs = 0;
};

/// Power-law exponent over the distance window.
///
/// Fits log f = a - gamma log(d + s) by least squares. The offset s is
/// searched in [1 - d_lo, d_lo] so that a reparameterized metric L d + C
/// recovers the same gamma; s = 0 is plain log-log regression. std_error is
/// the regression error at the optimal s combined with the resolution of the
/// 1-D search (1e-8 relative).
///
/// Throws InsufficientPairs with fewer than 10 finite pairs in the window
/// and ZeroValuesInWindow if any of them has f <= zero_tol.
ExponentFit fit_exponent(const DecayMatrix& f, const PathMetric& d, Window window = {}, double zero_tol = 1e-10);

}  // namespace coarsemap::analysis
