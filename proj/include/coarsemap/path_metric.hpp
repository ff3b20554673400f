#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "coarsemap/relation.hpp"
#include "coarsemap/site_set.hpp"

namespace coarsemap {

/// Graph distance; kUnreachable marks pairs in different components.
using Distance = std::int32_t;
inline constexpr Distance kUnreachable = -1;

inline bool reachable(Distance d) noexcept { return d != kUnreachable; }

/// All-pairs path metric of a graph, with an explicit unreachable sentinel.
class PathMetric {
 public:
  PathMetric() = default;

  /// Validates a distance table (zero diagonal, symmetric, entries >= 0 or
  /// kUnreachable). Used for metrics that do not come from a single graph.
  static PathMetric from_table(SiteSet sites, std::vector<Distance> dist);

  const SiteSet& sites() const noexcept { return sites_; }
  std::size_t size() const noexcept { return sites_.size(); }
  Distance operator()(std::size_t i, std::size_t j) const { return dist_[i * size() + j]; }
  const std::vector<Distance>& table() const noexcept { return dist_; }

  /// Largest finite distance over all pairs.
  Distance max_finite() const;
  /// Component-wise radius: max over components of (min eccentricity in that
  /// component). This is where the growth function saturates.
  Distance radius() const;
  /// Closed ball B_r(x), unreachable sites excluded.
  std::vector<std::size_t> ball(std::size_t x, Distance r) const;

  PathMetric permuted(std::span<const std::size_t> perm) const;

  friend bool operator==(const PathMetric& a, const PathMetric& b) { return a.sites_ == b.sites_ && a.dist_ == b.dist_; }

 private:
  PathMetric(SiteSet sites, std::vector<Distance> dist) : sites_(std::move(sites)), dist_(std::move(dist)) {}
  friend PathMetric path_metric(const Relation& e);

  SiteSet sites_;
  std::vector<Distance> dist_;
};

/// Breadth-first all-pairs distances. Edges are read undirected.
PathMetric path_metric(const Relation& e);

/// Nearest-neighbour lattice graph on sites with coordinates (L1 distance 1).
Relation lattice_graph(const SiteSet& sites);

}  // namespace coarsemap
