#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "coarsemap/path_metric.hpp"

namespace coarsemap {

/// gamma(r) = max over sites of |B_r(x)| for r = 0 .. r_max.
struct GrowthCurve {
  std::vector<std::size_t> gamma;

  Distance r_max() const { return static_cast<Distance>(gamma.size()) - 1; }
  friend bool operator==(const GrowthCurve&, const GrowthCurve&) = default;
};

GrowthCurve growth_curve(const PathMetric& d, Distance r_max);

/// max(radius, 10): the radius is where growth saturates; bounded graphs get
/// enough flat radii for a slope-zero fit.
Distance default_r_max(const PathMetric& d);

/// Fractional radius window, both ends in (0, 1).
struct Window {
  double lo = 0.2;
  double hi = 0.6;
};

/// Log-log growth fit. The regressor is log(2r + 1), the log of the ball
/// diameter, which makes gamma = (2r+1)^k an exact line of slope k.
struct GrowthFit {
  double slope = 0.0;
  double std_error = 0.0;
  Distance r_lo = 0;
  Distance r_hi = 0;
  std::size_t points = 0;
};

/// Fit over the integer radii r in [r_lo, r_hi] (clipped to [1, r_max]).
/// Throws InsufficientData with fewer than 4 radii.
GrowthFit growth_slope(const GrowthCurve& g, Distance r_lo, Distance r_hi);

/// Integer radius range covered by a fractional window of r_max.
std::pair<Distance, Distance> window_radii(const GrowthCurve& g, Window window);

struct AsdimOptions {
  Window window{};
  double margin = 0.25;
  double max_stderr = 0.5;
};

struct AsdimEstimate {
  GrowthFit fit;
  /// Smallest k with slope < k + 1 - margin; empty when undetermined.
  std::optional<int> k_hat;
};

AsdimEstimate asdim_bound(const GrowthCurve& g, const AsdimOptions& options = {});

/// True when Y grows strictly faster than X on the window: the slope excess
/// beats the combined standard error plus the margin.
bool growth_obstruction(const GrowthCurve& gx, const GrowthCurve& gy, const AsdimOptions& options = {});

}  // namespace coarsemap
