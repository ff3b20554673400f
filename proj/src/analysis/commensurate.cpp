#include "coarsemap/analysis/commensurate.hpp"

#include <charconv>
#include <cmath>
#include <limits>

#include "coarsemap/error.hpp"

namespace coarsemap::analysis {
namespace {

std::string format_number(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

double parse_number(std::string_view text, std::string_view spec) {
  double v = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size() || !std::isfinite(v)) {
    throw Error(ErrorCode::InvalidArgument, "bad number in function spec '" + std::string(spec) + "'");
  }
  return v;
}

double checked_log(const PositiveFunction& fn, double t) {
  const double v = fn.log_value(t);
  if (std::isnan(v) || v == std::numeric_limits<double>::infinity() || v == -std::numeric_limits<double>::infinity()) {
    throw Error(ErrorCode::NonPositiveFunction,
                fn.name + " is not a finite positive number at t = " + format_number(t));
  }
  return v;
}

}  // namespace

PositiveFunction power_function(double gamma) {
  return {"pow:" + format_number(gamma), [gamma](double t) {
            return t > 0.0 ? -gamma * std::log(t) : std::numeric_limits<double>::quiet_NaN();
          }};
}

PositiveFunction exponential_function(double a, double b) {
  if (!(a > 0.0)) throw Error(ErrorCode::NonPositiveFunction, "exp amplitude must be positive");
  const double log_a = std::log(a);
  return {"exp:" + format_number(a) + "," + format_number(b), [log_a, b](double t) { return log_a - b * t; }};
}

PositiveFunction inverse_log_function() {
  return {"log", [](double t) {
            return t > 0.0 ? -std::log(std::log1p(t)) : std::numeric_limits<double>::quiet_NaN();
          }};
}

PositiveFunction from_values(std::string name, std::function<double(double)> value) {
  return {name, [value = std::move(value)](double t) {
            const double v = value(t);
            return v > 0.0 && std::isfinite(v) ? std::log(v) : std::numeric_limits<double>::quiet_NaN();
          }};
}

PositiveFunction parse_function(std::string_view spec) {
  if (spec == "log") return inverse_log_function();
  if (spec.starts_with("pow:")) return power_function(parse_number(spec.substr(4), spec));
  if (spec.starts_with("exp:")) {
    const auto body = spec.substr(4);
    const auto comma = body.find(',');
    if (comma == std::string_view::npos) {
      throw Error(ErrorCode::InvalidArgument, "exp form needs 'exp:A,B', got '" + std::string(spec) + "'");
    }
    return exponential_function(parse_number(body.substr(0, comma), spec), parse_number(body.substr(comma + 1), spec));
  }
  throw Error(ErrorCode::InvalidArgument, "unknown function form '" + std::string(spec) + "' (pow:g, exp:A,B, log)");
}

CommensurateReport commensurate_check(const PositiveFunction& g, const PositiveFunction& h,
                                      const CommensurateOptions& options) {
  if (!(options.t_lo > 0.0 && options.t_hi > options.t_lo)) {
    throw Error(ErrorCode::InvalidArgument, "t_range must satisfy 0 < lo < hi");
  }
  if (options.samples < 2) throw Error(ErrorCode::InvalidArgument, "need at least 2 tail samples");
  if (!(options.band >= 1.0)) throw Error(ErrorCode::InvalidArgument, "band must be >= 1");
  if (options.L_set.empty() || options.C_set.empty()) throw Error(ErrorCode::EmptyGrid, "empty L or C set");

  const double log_lo = 0.5 * (std::log(options.t_lo) + std::log(options.t_hi));
  const double log_hi = std::log(options.t_hi);
  std::vector<double> ts(options.samples);
  for (std::size_t k = 0; k < ts.size(); ++k) {
    ts[k] = std::exp(log_lo + (log_hi - log_lo) * static_cast<double>(k) / static_cast<double>(ts.size() - 1));
  }

  CommensurateReport report;
  report.commensurate = true;
  const double log_band = std::log(options.band);
  for (double L : options.L_set) {
    if (!(L > 0.0)) throw Error(ErrorCode::InvalidArgument, "L must be positive");
    for (double C : options.C_set) {
      CommensurateCell cell{L, C, -std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(),
                            false};
      for (double t : ts) {
        const double arg = L * t + C;
        if (!(arg > 0.0)) {
          throw Error(ErrorCode::InvalidArgument, "L t + C is not positive on the tail (raise t_range)");
        }
        const double r = checked_log(g, arg) - checked_log(h, t);
        cell.log_sup = std::max(cell.log_sup, r);
        cell.log_inf = std::min(cell.log_inf, r);
      }
      cell.commensurate = std::isfinite(cell.log_sup) && std::isfinite(cell.log_inf) &&
                          cell.log_sup - cell.log_inf <= log_band;
      report.commensurate = report.commensurate && cell.commensurate;
      report.cells.push_back(cell);
    }
  }
  return report;
}

}  // namespace coarsemap::analysis
