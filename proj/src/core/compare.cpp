#include "coarsemap/compare.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "coarsemap/error.hpp"
#include "coarsemap/relation.hpp"

namespace coarsemap {

std::string_view to_string(QiDirection direction) {
  switch (direction) {
    case QiDirection::Both: return "both";
    case QiDirection::ForwardOnly: return "forward-only";
    case QiDirection::None: return "none";
  }
  return "none";
}

std::vector<DominationStep> monotone_domination(const PathMetric& d1, const PathMetric& d2) {
  require_same_sites(d1.sites(), d2.sites());
  // worst d2 at each exact value of d1; kUnreachable dominates everything
  std::map<Distance, Distance> worst;
  const std::size_t n = d1.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Distance a = d1(i, j);
      if (!reachable(a)) continue;
      const Distance b = d2(i, j);
      auto [it, inserted] = worst.try_emplace(a, b);
      if (!inserted && reachable(it->second)) it->second = reachable(b) ? std::max(it->second, b) : kUnreachable;
    }
  }
  std::vector<DominationStep> steps;
  Distance running = 0;
  for (auto [t, w] : worst) {
    if (reachable(running)) running = reachable(w) ? std::max(running, w) : kUnreachable;
    steps.push_back({t, running});
  }
  return steps;
}

QuasiIsometryReport quasi_isometry_fit(const PathMetric& d1, const PathMetric& d2, Distance r0,
                                       std::optional<QiConstants> given) {
  require_same_sites(d1.sites(), d2.sites());
  const std::size_t n = d1.size();
  QuasiIsometryReport rep;
  if (given) {
    rep.L = given->L;
    rep.C = given->C;
  } else {
    bool any = false;
    double l = 1.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const Distance a = d1(i, j), b = d2(i, j);
        if (!reachable(a) || !reachable(b) || a < r0) continue;
        any = true;
        l = std::max({l, static_cast<double>(b) / a, static_cast<double>(a) / b});
      }
    if (!any) throw Error(ErrorCode::NoPairsBeyondR0, "no pair finite in both metrics with d1 >= r0");
    double c = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const Distance a = d1(i, j), b = d2(i, j);
        if (!reachable(a) || !reachable(b)) continue;
        c = std::max({c, b - l * a, a / l - b});
      }
    rep.L = l;
    rep.C = c;
  }

  constexpr double kSlack = 1e-9;
  const double inf = std::numeric_limits<double>::infinity();
  std::size_t checked = 0, violated = 0;
  bool upper_ok = true, lower_ok = true;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Distance a = d1(i, j), b = d2(i, j);
      if (!reachable(a) && !reachable(b)) continue;
      ++checked;
      const double x = reachable(a) ? a : inf;
      const double y = reachable(b) ? b : inf;
      const bool upper = reachable(b) ? (y <= rep.L * x + rep.C + kSlack) : !reachable(a);
      const bool lower = reachable(a) ? (x / rep.L - rep.C <= y + kSlack) : !reachable(b);
      upper_ok = upper_ok && upper;
      lower_ok = lower_ok && lower;
      if (!(upper && lower)) ++violated;
    }
  rep.pairs_checked = checked;
  rep.violation_fraction = checked ? static_cast<double>(violated) / static_cast<double>(checked) : 0.0;
  rep.direction = (upper_ok && lower_ok) ? QiDirection::Both : (upper_ok ? QiDirection::ForwardOnly : QiDirection::None);
  return rep;
}

std::vector<StableInterval> stable_range(const DecayMatrix& f, const std::vector<double>& eps_grid, double l_tol) {
  if (eps_grid.empty()) throw Error(ErrorCode::EmptyGrid, "epsilon grid is empty");
  for (std::size_t k = 0; k < eps_grid.size(); ++k) {
    if (!(eps_grid[k] > 0.0)) throw Error(ErrorCode::NonPositiveEpsilon, "grid values must be positive");
    if (k > 0 && !(eps_grid[k] < eps_grid[k - 1])) {
      throw Error(ErrorCode::InvalidArgument, "epsilon grid must be strictly decreasing");
    }
  }
  std::vector<PathMetric> metrics;
  metrics.reserve(eps_grid.size());
  for (double eps : eps_grid) metrics.push_back(path_metric(epsilon_graph(f, eps)));

  auto comparable = [&](const PathMetric& a, const PathMetric& b) {
    if (a == b) return true;
    try {
      const auto rep = quasi_isometry_fit(a, b, 1);
      return rep.L <= l_tol && rep.violation_fraction == 0.0;
    } catch (const Error& e) {
      if (e.code() == ErrorCode::NoPairsBeyondR0) return false;
      throw;
    }
  };

  std::vector<StableInterval> out;
  std::size_t start = 0;
  for (std::size_t k = 1; k <= eps_grid.size(); ++k) {
    if (k == eps_grid.size() || !comparable(metrics[k - 1], metrics[k])) {
      out.push_back({eps_grid[start], eps_grid[k - 1], start, k - 1});
      start = k;
    }
  }
  return out;
}

bool semicontinuity_check(const DecayMatrix& f, const DecayMatrix& g, double eps) {
  const double delta = sup_distance(f, g);
  if (!(eps > delta)) throw Error(ErrorCode::EpsilonTooSmall, "epsilon must exceed sup|f - g|");
  // widen the lower threshold by one ulp so rounding in eps - delta cannot
  // exclude a pair that satisfies the inequality in exact arithmetic
  const double lower = std::nextafter(eps - delta, 0.0);
  if (!(lower > 0.0)) throw Error(ErrorCode::EpsilonTooSmall, "epsilon must exceed sup|f - g|");
  return epsilon_graph(f, eps).subset_of(epsilon_graph(g, lower));
}

}  // namespace coarsemap
