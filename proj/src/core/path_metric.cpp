#include "coarsemap/path_metric.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>

#include "coarsemap/error.hpp"

namespace coarsemap {

PathMetric PathMetric::from_table(SiteSet sites, std::vector<Distance> dist) {
  const std::size_t n = sites.size();
  if (dist.size() != n * n) throw Error(ErrorCode::DimensionMismatch, "distance table is not n x n");
  for (std::size_t i = 0; i < n; ++i) {
    if (dist[i * n + i] != 0) throw Error(ErrorCode::InvalidArgument, "distance table has nonzero diagonal");
    for (std::size_t j = 0; j < n; ++j) {
      const Distance d = dist[i * n + j];
      if (d < 0 && d != kUnreachable) throw Error(ErrorCode::InvalidArgument, "negative distance");
      if (d != dist[j * n + i]) throw Error(ErrorCode::AsymmetricInput, "distance table is not symmetric");
      if (i != j && d == 0) throw Error(ErrorCode::InvalidArgument, "distinct sites at distance 0");
    }
  }
  return PathMetric(std::move(sites), std::move(dist));
}

PathMetric path_metric(const Relation& e) {
  const std::size_t n = e.size();
  std::vector<std::vector<std::size_t>> adjacency(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && (e.contains(i, j) || e.contains(j, i))) adjacency[i].push_back(j);

  std::vector<Distance> dist(n * n, kUnreachable);
  std::vector<std::size_t> queue;
  queue.reserve(n);
  for (std::size_t s = 0; s < n; ++s) {
    Distance* row = dist.data() + s * n;
    row[s] = 0;
    queue.clear();
    queue.push_back(s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t u = queue[head];
      for (std::size_t v : adjacency[u]) {
        if (row[v] == kUnreachable) {
          row[v] = row[u] + 1;
          queue.push_back(v);
        }
      }
    }
  }
  return PathMetric(e.sites(), std::move(dist));
}

Distance PathMetric::max_finite() const {
  Distance best = 0;
  for (Distance d : dist_) best = std::max(best, d);
  return best;
}

Distance PathMetric::radius() const {
  const std::size_t n = size();
  // component label = smallest reachable index
  std::vector<std::size_t> label(n);
  for (std::size_t i = 0; i < n; ++i) {
    label[i] = i;
    for (std::size_t j = 0; j < i; ++j)
      if (reachable((*this)(i, j))) {
        label[i] = label[j];
        break;
      }
  }
  std::vector<Distance> comp_radius(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    Distance ecc = 0;
    for (std::size_t j = 0; j < n; ++j) ecc = std::max(ecc, (*this)(i, j));
    Distance& r = comp_radius[label[i]];
    r = (r < 0) ? ecc : std::min(r, ecc);
  }
  return *std::max_element(comp_radius.begin(), comp_radius.end());
}

std::vector<std::size_t> PathMetric::ball(std::size_t x, Distance r) const {
  std::vector<std::size_t> out;
  for (std::size_t y = 0; y < size(); ++y) {
    const Distance d = (*this)(x, y);
    if (reachable(d) && d <= r) out.push_back(y);
  }
  return out;
}

PathMetric PathMetric::permuted(std::span<const std::size_t> perm) const {
  const std::size_t n = size();
  std::vector<Distance> dist(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) dist[perm[i] * n + perm[j]] = dist_[i * n + j];
  return PathMetric(sites_.permuted(perm), std::move(dist));
}

Relation lattice_graph(const SiteSet& sites) {
  const auto& coords = sites.coords();
  Relation r(sites);
  for (std::size_t i = 0; i < sites.size(); ++i) {
    for (std::size_t j = i + 1; j < sites.size(); ++j) {
      if (coords[i].size() != coords[j].size()) throw Error(ErrorCode::InvalidArgument, "mixed coordinate dimensions");
      int l1 = 0;
      for (std::size_t k = 0; k < coords[i].size(); ++k) l1 += std::abs(coords[i][k] - coords[j][k]);
      if (l1 == 1) {
        r.insert(i, j);
        r.insert(j, i);
      }
    }
  }
  return r;
}

}  // namespace coarsemap
