#pragma once

#include <cstddef>
#include <string_view>

#include "coarsemap/decay_matrix.hpp"
#include "coarsemap/growth.hpp"
#include "coarsemap/path_metric.hpp"

namespace coarsemap::analysis {

enum class LengthVerdict { Zero, Finite, Infinite, Inconclusive };
std::string_view to_string(LengthVerdict verdict);

struct LengthConfig {
  Window window{};
  double zero_tol = 1e-10;
  std::size_t min_pairs = 10;
  double min_r2 = 0.9;
  /// Largest tolerated upward curvature of log f against d, relative to the
  /// linear drop across the window.
  double max_curvature = 0.1;
};

struct LengthClassification {
  LengthVerdict verdict = LengthVerdict::Inconclusive;
  /// Largest finite distance carrying a value above zero_tol.
  Distance R = 0;
  double A = 0.0;
  double B = 0.0;
  double fit_r2 = 0.0;
  double loglog_r2 = 0.0;
  double curvature = 0.0;
  Distance window_lo = 0;
  Distance window_hi = 0;
  std::size_t n_pairs = 0;
};

/// Integer distance window [max(ceil(lo D), 2), floor(hi D)] for D = d.max_finite().
std::pair<Distance, Distance> distance_window(const PathMetric& d, Window window);

/// Length 0 / finite / infinite classification on the middle window.
///
/// ZERO when every value above zero_tol sits at finite distance below the
/// window start. Otherwise log f is regressed on d over window pairs with
/// f > zero_tol: FINITE needs a negative slope, r2 >= min_r2 and no upward
/// curvature beyond max_curvature; INFINITE needs that curvature together
/// with a log-log fit of r2 >= min_r2. Infinite length is a proxy: no finite
/// sample dominates every exponential.
LengthClassification classify_length(const DecayMatrix& f, const PathMetric& d, const LengthConfig& config = {});

}  // namespace coarsemap::analysis
