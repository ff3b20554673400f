#include "coarsemap/analysis/persistence.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>

#include "coarsemap/error.hpp"
#include "coarsemap/growth.hpp"
#include "coarsemap/relation.hpp"

namespace coarsemap::analysis {
namespace {

std::vector<PersistenceCell> sweep_row(const DecayMatrix& f, double eps, std::size_t row,
                                       const std::vector<RadiusWindow>& windows) {
  const PathMetric d = path_metric(epsilon_graph(f, eps));
  const GrowthCurve curve = growth_curve(d, default_r_max(d));
  std::vector<PersistenceCell> cells;
  for (std::size_t w = 0; w < windows.size(); ++w) {
    PersistenceCell cell{row, w, false, std::numeric_limits<double>::quiet_NaN(),
                         std::numeric_limits<double>::quiet_NaN()};
    try {
      const GrowthFit fit = growth_slope(curve, windows[w].first, windows[w].second);
      cell.valid = true;
      cell.slope = fit.slope;
      cell.std_error = fit.std_error;
    } catch (const Error& e) {
      if (e.code() != ErrorCode::InsufficientData) throw;
    }
    cells.push_back(cell);
  }
  return cells;
}

// Largest 4-connected region among eligible cells whose slopes lie in
// [lo, lo + range], tried for every eligible lo.
std::optional<Plateau> find_plateau(const PersistenceGrid& grid, const PersistenceOptions& options) {
  const std::size_t rows = grid.eps_values.size();
  const std::size_t cols = grid.r_windows.size();
  std::vector<std::size_t> eligible;
  for (std::size_t k = 0; k < grid.cells.size(); ++k) {
    const auto& c = grid.cells[k];
    if (c.valid && c.std_error <= options.max_stderr) eligible.push_back(k);
  }
  std::vector<double> starts;
  for (auto k : eligible) starts.push_back(grid.cells[k].slope);
  std::sort(starts.begin(), starts.end());
  starts.erase(std::unique(starts.begin(), starts.end()), starts.end());

  std::vector<std::size_t> best;
  std::vector<std::uint8_t> in_band(grid.cells.size()), seen(grid.cells.size());
  for (double lo : starts) {
    std::fill(in_band.begin(), in_band.end(), 0);
    std::fill(seen.begin(), seen.end(), 0);
    for (auto k : eligible) {
      const double s = grid.cells[k].slope;
      if (s >= lo && s <= lo + options.max_slope_range) in_band[k] = 1;
    }
    for (auto start : eligible) {
      if (!in_band[start] || seen[start]) continue;
      std::vector<std::size_t> region{start};
      seen[start] = 1;
      for (std::size_t q = 0; q < region.size(); ++q) {
        const std::size_t r = region[q] / cols, c = region[q] % cols;
        const std::size_t nbrs[4] = {r > 0 ? region[q] - cols : region[q], r + 1 < rows ? region[q] + cols : region[q],
                                     c > 0 ? region[q] - 1 : region[q], c + 1 < cols ? region[q] + 1 : region[q]};
        for (auto nb : nbrs)
          if (in_band[nb] && !seen[nb]) {
            seen[nb] = 1;
            region.push_back(nb);
          }
      }
      if (region.size() > best.size()) {
        std::sort(region.begin(), region.end());
        best = std::move(region);
      }
    }
  }
  if (best.size() < 2) return std::nullopt;

  Plateau p;
  p.slope_min = std::numeric_limits<double>::infinity();
  p.slope_max = -std::numeric_limits<double>::infinity();
  double sum = 0.0;
  for (auto k : best) {
    const auto& c = grid.cells[k];
    p.cells.emplace_back(c.eps_index, c.window_index);
    p.slope_min = std::min(p.slope_min, c.slope);
    p.slope_max = std::max(p.slope_max, c.slope);
    sum += c.slope;
  }
  p.slope_mean = sum / static_cast<double>(best.size());
  return p;
}

}  // namespace

PersistenceGrid persistence_sweep(const DecayMatrix& f, const std::vector<double>& eps_grid,
                                  const std::vector<RadiusWindow>& r_windows, const PersistenceOptions& options) {
  if (eps_grid.empty()) throw Error(ErrorCode::EmptyGrid, "empty epsilon grid");
  if (r_windows.empty()) throw Error(ErrorCode::EmptyGrid, "empty radius-window grid");
  for (double eps : eps_grid)
    if (!(eps > 0.0)) throw Error(ErrorCode::NonPositiveEpsilon, "epsilon grid entries must be positive");
  for (const auto& [lo, hi] : r_windows)
    if (lo < 0 || hi < lo) throw Error(ErrorCode::InvalidArgument, "radius windows must satisfy 0 <= lo <= hi");

  PersistenceGrid grid;
  grid.eps_values = eps_grid;
  grid.r_windows = r_windows;
  std::vector<std::future<std::vector<PersistenceCell>>> rows;
  for (std::size_t e = 0; e < eps_grid.size(); ++e) {
    rows.push_back(std::async(std::launch::async, sweep_row, std::cref(f), eps_grid[e], e, std::cref(r_windows)));
  }
  for (auto& row : rows) {
    auto cells = row.get();
    grid.cells.insert(grid.cells.end(), cells.begin(), cells.end());
  }
  grid.plateau = find_plateau(grid, options);
  return grid;
}

}  // namespace coarsemap::analysis
