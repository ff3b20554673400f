#include "coarsemap/regression.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>

#include "coarsemap/error.hpp"

namespace coarsemap {

LineFit fit_line(std::vector<Point2> points) {
  if (points.size() < 3) throw Error(ErrorCode::InsufficientData, "need at least 3 points for a line fit");
  std::sort(points.begin(), points.end());
  const double n = static_cast<double>(points.size());
  double mx = 0.0, my = 0.0;
  for (const auto& p : points) {
    mx += p.x;
    my += p.y;
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (const auto& p : points) {
    sxx += (p.x - mx) * (p.x - mx);
    sxy += (p.x - mx) * (p.y - my);
    syy += (p.y - my) * (p.y - my);
  }
  if (!(sxx > 0.0)) throw Error(ErrorCode::InsufficientData, "all x values coincide");
  LineFit fit;
  fit.n = points.size();
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double rss = 0.0;
  for (const auto& p : points) {
    const double r = p.y - (fit.intercept + fit.slope * p.x);
    rss += r * r;
  }
  fit.slope_stderr = std::sqrt(std::max(0.0, rss / (n - 2.0)) / sxx);
  fit.r2 = syy > 0.0 ? 1.0 - rss / syy : 1.0;
  return fit;
}

double quadratic_curvature(std::vector<Point2> points) {
  if (points.size() < 4) throw Error(ErrorCode::InsufficientData, "need at least 4 points for a quadratic fit");
  std::sort(points.begin(), points.end());
  const double lo = points.front().x;
  const double hi = points.back().x;
  if (!(hi > lo)) throw Error(ErrorCode::InsufficientData, "all x values coincide");
  const double mid = 0.5 * (lo + hi);
  Eigen::MatrixXd a(points.size(), 3);
  Eigen::VectorXd b(points.size());
  for (std::size_t k = 0; k < points.size(); ++k) {
    const double t = (points[k].x - mid) / (hi - lo);
    a(k, 0) = t * t;
    a(k, 1) = t;
    a(k, 2) = 1.0;
    b(k) = points[k].y;
  }
  const Eigen::Vector3d c = a.colPivHouseholderQr().solve(b);
  return c(0);
}

}  // namespace coarsemap
