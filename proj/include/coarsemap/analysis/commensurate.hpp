#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace coarsemap::analysis {

/// Positive test function g: R+ -> R+, held through log g so that fast
/// decay does not underflow.
struct PositiveFunction {
  std::string name;
  std::function<double(double)> log_value;
};

/// t^-gamma.
PositiveFunction power_function(double gamma);
/// A e^{-B t}.
PositiveFunction exponential_function(double a, double b);
/// 1 / ln(1 + t), the logarithmic class shifted to stay positive at t > 0.
PositiveFunction inverse_log_function();
/// Wraps a value-returning function; non-positive values raise
/// NonPositiveFunction when evaluated.
PositiveFunction from_values(std::string name, std::function<double(double)> value);

/// Parses "pow:gamma", "exp:A,B" or "log". Throws InvalidArgument.
PositiveFunction parse_function(std::string_view spec);

struct CommensurateOptions {
  std::vector<double> L_set{0.5, 1.0, 2.0, 3.0};
  std::vector<double> C_set{-2.0, 0.0, 5.0};
  double t_lo = 1.0;
  double t_hi = 1e8;
  std::size_t samples = 200;
  /// Largest tolerated sup/inf of g(Lt+C)/h(t) over the tail.
  double band = 10.0;
};

struct CommensurateCell {
  double L;
  double C;
  double log_sup;
  double log_inf;
  bool commensurate;
};

struct CommensurateReport {
  std::vector<CommensurateCell> cells;
  bool commensurate = false;
};

/// For each (L, C), the sup and inf of g(Lt+C)/h(t) over geometric samples
/// of the upper (log-scale) half of [t_lo, t_hi]. A pair passes when both are
/// finite and their ratio stays within the band; the verdict needs every pair.
CommensurateReport commensurate_check(const PositiveFunction& g, const PositiveFunction& h,
                                      const CommensurateOptions& options = {});

}  // namespace coarsemap::analysis
