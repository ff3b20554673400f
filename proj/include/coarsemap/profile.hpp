#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "coarsemap/growth.hpp"
#include "coarsemap/path_metric.hpp"
#include "coarsemap/relation.hpp"

namespace coarsemap {

struct Component {
  std::vector<std::size_t> sites;  // increasing index order
  bool dust = false;
  friend bool operator==(const Component&, const Component&) = default;
};

/// Component partition of a relation, largest first (ties broken by the
/// smallest label). Components of size <= dust_cutoff are marked as dust:
/// the finite sets adjoined by the connected completion.
struct ConnectedProfile {
  std::vector<Component> components;
  std::size_t dust_cutoff = 0;
  std::size_t dust_sites = 0;

  std::vector<std::size_t> sizes() const;
};

/// max(2, floor(0.02 n)).
std::size_t default_dust_cutoff(std::size_t n);

ConnectedProfile connected_profile(const Relation& e, std::optional<std::size_t> dust_cutoff = std::nullopt);

/// Compares two profiles of the same sites away from a region. Dust
/// components touching the region are dropped from both sides (together
/// with their sites), region sites are removed from the remaining
/// components, and the resulting partitions must coincide.
bool same_outside_region(const ConnectedProfile& a, const ConnectedProfile& b, std::span<const std::size_t> region);

/// Structural summary of the eps-graph of f.
struct CoarseProfile {
  double epsilon = 0.0;
  std::size_t edges = 0;
  ConnectedProfile connected;
  /// Max finite distance; present only when the graph is connected.
  std::optional<Distance> diameter;
  /// Growth fit and asdim bound; absent when the window holds too few radii.
  std::optional<AsdimEstimate> asdim;
};

CoarseProfile coarse_profile(const DecayMatrix& f, double eps, const AsdimOptions& options = {},
                             std::optional<std::size_t> dust_cutoff = std::nullopt);

}  // namespace coarsemap
