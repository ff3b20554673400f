#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "coarsemap/decay_matrix.hpp"
#include "coarsemap/path_metric.hpp"

namespace coarsemap::analysis {

using RadiusWindow = std::pair<Distance, Distance>;

struct PersistenceCell {
  std::size_t eps_index;
  std::size_t window_index;
  /// False when the growth curve has fewer than 4 radii inside the window.
  bool valid;
  double slope;
  double std_error;
};

struct Plateau {
  std::vector<std::pair<std::size_t, std::size_t>> cells;  // (eps, window) indices
  double slope_min;
  double slope_max;
  double slope_mean;
};

struct PersistenceOptions {
  double max_slope_range = 0.3;
  double max_stderr = 0.2;
};

struct PersistenceGrid {
  std::vector<double> eps_values;
  std::vector<RadiusWindow> r_windows;
  std::vector<PersistenceCell> cells;  // row-major, eps outer
  std::optional<Plateau> plateau;

  const PersistenceCell& at(std::size_t eps_index, std::size_t window_index) const {
    return cells[eps_index * r_windows.size() + window_index];
  }
};

/// Growth slope of every eps-graph (r_max = default_r_max) over every radius
/// window. The plateau is the largest 4-connected set of valid cells with
/// stderr <= max_stderr whose slopes span at most max_slope_range; at least
/// two cells are required. Throws EmptyGrid.
PersistenceGrid persistence_sweep(const DecayMatrix& f, const std::vector<double>& eps_grid,
                                  const std::vector<RadiusWindow>& r_windows, const PersistenceOptions& options = {});

}  // namespace coarsemap::analysis
