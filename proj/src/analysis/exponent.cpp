#include "coarsemap/analysis/exponent.hpp"

#include <algorithm>
#include <boost/math/tools/minima.hpp>
#include <cmath>
#include <limits>
#include <vector>

#include "coarsemap/analysis/length.hpp"
#include "coarsemap/error.hpp"
#include "coarsemap/regression.hpp"

namespace coarsemap::analysis {
namespace {

struct Sample {
  double d;
  double log_f;
};

LineFit fit_at(const std::vector<Sample>& samples, double s) {
  std::vector<Point2> pts;
  pts.reserve(samples.size());
  for (const auto& p : samples) pts.push_back({std::log(p.d + s), p.log_f});
  return fit_line(std::move(pts));
}

double rss(const LineFit& fit, const std::vector<Sample>& samples, double s) {
  double total = 0.0;
  for (const auto& p : samples) {
    const double r = p.log_f - (fit.intercept + fit.slope * std::log(p.d + s));
    total += r * r;
  }
  return total;
}

}  // namespace

ExponentFit fit_exponent(const DecayMatrix& f, const PathMetric& d, Window window, double zero_tol) {
  require_same_sites(f.sites(), d.sites());
  if (!(zero_tol > 0.0)) throw Error(ErrorCode::InvalidArgument, "zero_tol must be positive");
  ExponentFit out;
  std::tie(out.window_lo, out.window_hi) = distance_window(d, window);

  std::vector<Sample> samples;
  const std::size_t n = f.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Distance dist = d(i, j);
      if (!reachable(dist) || dist < out.window_lo || dist > out.window_hi) continue;
      if (!(f(i, j) > zero_tol)) {
        throw Error(ErrorCode::ZeroValuesInWindow, "f <= zero_tol at distance " + std::to_string(dist));
      }
      samples.push_back({static_cast<double>(dist), std::log(f(i, j))});
    }
  out.n_pairs = samples.size();
  if (samples.size() < 10) {
    throw Error(ErrorCode::InsufficientPairs, "only " + std::to_string(samples.size()) + " pairs in distance window");
  }
  // canonical sample order keeps the search path independent of site order
  std::sort(samples.begin(), samples.end(), [](auto& a, auto& b) { return a.d < b.d || (a.d == b.d && a.log_f < b.log_f); });
  if (samples.front().d == samples.back().d) throw Error(ErrorCode::InsufficientPairs, "window holds a single distance");

  const double d_lo = samples.front().d;
  const double s_min = 1.0 - d_lo;
  const double s_max = d_lo;
  auto objective = [&](double s) { return rss(fit_at(samples, s), samples, s); };

  constexpr int kScan = 64;
  double best_s = 0.0, best = objective(0.0);
  for (int k = 0; k <= kScan; ++k) {
    const double s = s_min + (s_max - s_min) * k / kScan;
    const double v = objective(s);
    if (v < best) {
      best = v;
      best_s = s;
    }
  }
  const double step = (s_max - s_min) / kScan;
  const double lo = std::max(s_min, best_s - step);
  const double hi = std::min(s_max, best_s + step);
  if (hi > lo) {
    boost::uintmax_t iters = 200;
    const auto [s_opt, v_opt] =
        boost::math::tools::brent_find_minima(objective, lo, hi, std::numeric_limits<double>::digits / 2, iters);
    if (v_opt < best) {
      best = v_opt;
      best_s = s_opt;
    }
  }

  const LineFit line = fit_at(samples, best_s);
  out.gamma = -line.slope;
  out.shift = best_s;
  out.shift_at_bound = std::abs(best_s - s_min) <= 1e-6 * std::max(1.0, d_lo) ||
                       std::abs(best_s - s_max) <= 1e-6 * std::max(1.0, d_lo);
  out.r2 = line.r2;
  out.std_error = std::hypot(line.slope_stderr, 1e-8 * std::max(1.0, std::abs(out.gamma)));
  return out;
}

}  // namespace coarsemap::analysis
