#include "coarsemap/growth.hpp"

#include <algorithm>
#include <cmath>

#include "coarsemap/error.hpp"
#include "coarsemap/regression.hpp"

namespace coarsemap {

GrowthCurve growth_curve(const PathMetric& d, Distance r_max) {
  if (r_max < 1) throw Error(ErrorCode::InvalidArgument, "r_max must be at least 1");
  const std::size_t n = d.size();
  GrowthCurve g;
  g.gamma.assign(static_cast<std::size_t>(r_max) + 1, 0);
  std::vector<std::size_t> counts(static_cast<std::size_t>(r_max) + 1);
  for (std::size_t x = 0; x < n; ++x) {
    std::fill(counts.begin(), counts.end(), 0);
    for (std::size_t y = 0; y < n; ++y) {
      const Distance dist = d(x, y);
      if (reachable(dist) && dist <= r_max) ++counts[static_cast<std::size_t>(dist)];
    }
    std::size_t running = 0;
    for (std::size_t r = 0; r < counts.size(); ++r) {
      running += counts[r];
      g.gamma[r] = std::max(g.gamma[r], running);
    }
  }
  return g;
}

Distance default_r_max(const PathMetric& d) { return std::max<Distance>(d.radius(), 10); }

GrowthFit growth_slope(const GrowthCurve& g, Distance r_lo, Distance r_hi) {
  const Distance lo = std::max<Distance>(1, r_lo);
  const Distance hi = std::min(r_hi, g.r_max());
  if (hi - lo + 1 < 4) throw Error(ErrorCode::InsufficientData, "fewer than 4 radii inside the growth window");
  std::vector<Point2> pts;
  for (Distance r = lo; r <= hi; ++r) {
    pts.push_back({std::log(2.0 * r + 1.0), std::log(static_cast<double>(g.gamma[static_cast<std::size_t>(r)]))});
  }
  const LineFit line = fit_line(std::move(pts));
  return GrowthFit{line.slope, line.slope_stderr, lo, hi, line.n};
}

std::pair<Distance, Distance> window_radii(const GrowthCurve& g, Window window) {
  if (!(window.lo > 0.0 && window.lo < window.hi && window.hi < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "window must satisfy 0 < lo < hi < 1");
  }
  const double r_max = static_cast<double>(g.r_max());
  return {static_cast<Distance>(std::ceil(window.lo * r_max)), static_cast<Distance>(std::floor(window.hi * r_max))};
}

AsdimEstimate asdim_bound(const GrowthCurve& g, const AsdimOptions& options) {
  const auto [lo, hi] = window_radii(g, options.window);
  AsdimEstimate est;
  est.fit = growth_slope(g, lo, hi);
  if (est.fit.std_error <= options.max_stderr) {
    int k = 0;
    while (!(est.fit.slope < k + 1 - options.margin)) ++k;
    est.k_hat = k;
  }
  return est;
}

bool growth_obstruction(const GrowthCurve& gx, const GrowthCurve& gy, const AsdimOptions& options) {
  const auto fx = asdim_bound(gx, options).fit;
  const auto fy = asdim_bound(gy, options).fit;
  const double combined = std::hypot(fx.std_error, fy.std_error);
  return fy.slope - fx.slope > combined + options.margin;
}

}  // namespace coarsemap
