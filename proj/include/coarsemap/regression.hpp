#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace coarsemap {

struct Point2 {
  double x;
  double y;
  friend bool operator<(const Point2& a, const Point2& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }
};

struct LineFit {
  double slope = 0.0;
  double intercept = 0.0;
  double slope_stderr = 0.0;
  double r2 = 0.0;  // 1 when y has no variance
  std::size_t n = 0;
};

/// Ordinary least squares y = intercept + slope * x.
///
/// Points are sorted before summation so the result does not depend on the
/// order in which they were collected. Requires >= 3 points with distinct x.
LineFit fit_line(std::vector<Point2> points);

/// Quadratic least squares on x rescaled to [-1/2, 1/2]; returns the
/// coefficient of the squared term. Used as a dimensionless curvature probe.
double quadratic_curvature(std::vector<Point2> points);

}  // namespace coarsemap
