#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "coarsemap/decay_matrix.hpp"
#include "coarsemap/path_metric.hpp"

namespace coarsemap {

/// One step of the control function rho: every pair with d1 <= t has
/// d2 <= rho. rho is kUnreachable when some such pair is disconnected in d2.
struct DominationStep {
  Distance t;
  Distance rho;
  friend bool operator==(const DominationStep&, const DominationStep&) = default;
};

/// rho(t) = max{d2(x,y) : d1(x,y) <= t} for every realized finite value t of
/// d1, so that E^{d1} is contained in E^{d2} with control function rho.
std::vector<DominationStep> monotone_domination(const PathMetric& d1, const PathMetric& d2);

enum class QiDirection { Both, ForwardOnly, None };
std::string_view to_string(QiDirection direction);

struct QuasiIsometryReport {
  double L = 1.0;
  double C = 0.0;
  double violation_fraction = 0.0;
  QiDirection direction = QiDirection::Both;
  std::size_t pairs_checked = 0;
};

struct QiConstants {
  double L;
  double C;
};

/// Fits L^{-1} d1 - C <= d2 <= L d1 + C on the identity map.
///
/// L is the worst distortion ratio over pairs with d1 >= r0, C the smallest
/// additive slack making both inequalities hold on pairs finite in both.
/// Pairs finite in exactly one metric always violate. When `given` is set the
/// violations are counted against those constants instead of the fit.
/// "ForwardOnly" means only the upper bound d2 <= L d1 + C holds everywhere.
QuasiIsometryReport quasi_isometry_fit(const PathMetric& d1, const PathMetric& d2, Distance r0,
                                       std::optional<QiConstants> given = std::nullopt);

struct StableInterval {
  double eps_hi;
  double eps_lo;
  std::size_t first;  // index into the grid
  std::size_t last;
  friend bool operator==(const StableInterval&, const StableInterval&) = default;
};

/// Maximal runs of the (strictly decreasing) grid over which consecutive
/// eps-graph metrics are bi-Lipschitz with L <= l_tol and no violations.
/// A finite-scale proxy for the range where E_f = E_{f,eps}.
std::vector<StableInterval> stable_range(const DecayMatrix& f, const std::vector<double>& eps_grid,
                                         double l_tol = 3.0);

/// Checks E_{f,eps} subset of E_{g,eps-delta} with delta = sup|f - g|.
bool semicontinuity_check(const DecayMatrix& f, const DecayMatrix& g, double eps);

}  // namespace coarsemap
