#include "coarsemap/analysis/length.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "coarsemap/error.hpp"
#include "coarsemap/regression.hpp"

namespace coarsemap::analysis {

std::string_view to_string(LengthVerdict verdict) {
  switch (verdict) {
    case LengthVerdict::Zero: return "ZERO";
    case LengthVerdict::Finite: return "FINITE";
    case LengthVerdict::Infinite: return "INFINITE";
    case LengthVerdict::Inconclusive: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

std::pair<Distance, Distance> distance_window(const PathMetric& d, Window window) {
  if (!(window.lo > 0.0 && window.lo < window.hi && window.hi < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "window must satisfy 0 < lo < hi < 1");
  }
  const double dmax = static_cast<double>(d.max_finite());
  const auto lo = std::max<Distance>(static_cast<Distance>(std::ceil(window.lo * dmax)), 2);
  const auto hi = static_cast<Distance>(std::floor(window.hi * dmax));
  return {lo, hi};
}

LengthClassification classify_length(const DecayMatrix& f, const PathMetric& d, const LengthConfig& config) {
  require_same_sites(f.sites(), d.sites());
  if (!(config.zero_tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "zero_tol must be positive");
  const std::size_t n = f.size();
  LengthClassification out;
  std::tie(out.window_lo, out.window_hi) = distance_window(d, config.window);

  bool far_mass = false;  // value above zero_tol between disconnected sites
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!(f(i, j) > config.zero_tol)) continue;
      if (reachable(d(i, j)))
        out.R = std::max(out.R, d(i, j));
      else
        far_mass = true;
    }
  if (!far_mass && out.R < out.window_lo) {
    out.verdict = LengthVerdict::Zero;
    return out;
  }

  std::vector<Point2> lin, loglog;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Distance dist = d(i, j);
      if (!reachable(dist) || dist < out.window_lo || dist > out.window_hi || !(f(i, j) > config.zero_tol)) continue;
      const double lf = std::log(f(i, j));
      lin.push_back({static_cast<double>(dist), lf});
      loglog.push_back({std::log(static_cast<double>(dist)), lf});
    }
  out.n_pairs = lin.size();
  if (lin.size() < config.min_pairs) {
    throw Error(ErrorCode::InsufficientPairs, "only " + std::to_string(lin.size()) +
                                                  " pairs with f > zero_tol in distance window [" +
                                                  std::to_string(out.window_lo) + ", " +
                                                  std::to_string(out.window_hi) + "]");
  }
  const auto [xmin, xmax] = std::minmax_element(lin.begin(), lin.end(), [](auto& a, auto& b) { return a.x < b.x; });
  const double span = xmax->x - xmin->x;
  if (!(span > 0.0)) throw Error(ErrorCode::InsufficientPairs, "window holds a single distance");

  const LineFit line = fit_line(lin);
  const LineFit llog = fit_line(loglog);
  const double drop = std::abs(line.slope) * span;
  const double quad = span >= 2.0 ? quadratic_curvature(lin) : 0.0;  // needs 3 distinct distances
  out.curvature = drop > 0.0 ? quad / drop : 0.0;
  out.fit_r2 = line.r2;
  out.loglog_r2 = llog.r2;

  if (line.slope < 0.0 && line.r2 >= config.min_r2 && out.curvature <= config.max_curvature) {
    out.verdict = LengthVerdict::Finite;
    out.B = -line.slope;
    out.A = std::exp(line.intercept);
  } else if (out.curvature > config.max_curvature && llog.slope < 0.0 && llog.r2 >= config.min_r2) {
    out.verdict = LengthVerdict::Infinite;
  }
  return out;
}

}  // namespace coarsemap::analysis
