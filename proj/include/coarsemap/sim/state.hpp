#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "coarsemap/relation.hpp"
#include "coarsemap/sim/linalg.hpp"
#include "coarsemap/site_set.hpp"

namespace coarsemap::sim {

inline constexpr std::size_t kDefaultSiteCap = 20;

/// Pure state of n qubits. Site k is bit k of the basis index.
class SpinState {
 public:
  SpinState() = default;
  /// Validates the length (2^n) and the norm (1 within 1e-12).
  SpinState(SiteSet sites, CVector amplitudes);

  const SiteSet& sites() const noexcept { return sites_; }
  std::size_t size() const noexcept { return sites_.size(); }
  const CVector& amplitudes() const noexcept { return amp_; }

  /// Relabelled copy: site i becomes site perm[i].
  SpinState permuted(std::span<const std::size_t> perm) const;

 private:
  SiteSet sites_;
  CVector amp_;
};

/// Single-qubit factor cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>.
struct LocalState {
  double theta = 0.0;
  double phi = 0.0;
  /// "0", "1", "+", "-", "+i", "-i".
  static LocalState named(const std::string& name);
};

SpinState product_state(const SiteSet& sites, std::span<const LocalState> factors,
                        std::size_t cap = kDefaultSiteCap);
SpinState ghz_state(const SiteSet& sites, std::size_t cap = kDefaultSiteCap);
/// (|00> + |11>)/sqrt(2) on every listed pair, |0> on unpaired sites.
SpinState bell_pairs_state(const SiteSet& sites, std::span<const std::pair<std::size_t, std::size_t>> pairs,
                           std::size_t cap = kDefaultSiteCap);
/// |+>^n followed by CZ on every edge of the graph.
SpinState cluster_state(const Relation& graph, std::size_t cap = kDefaultSiteCap);
/// Amplitudes sqrt(exp(betaJ sum_i s_i s_{i+1})) / sqrt(Z) along the site
/// order, s = 1 - 2 b. Its Z-Z covariances are those of the open classical
/// Ising chain.
SpinState ising_coherent_state(const SiteSet& sites, double beta_j, std::size_t cap = kDefaultSiteCap);

/// Reduced density matrix on `support`; local bit q <-> support[q]. The
/// traced sites are summed in label order.
CMatrix reduced_density(const SpinState& psi, std::span<const std::size_t> support);

/// Indices sorted by site label.
std::vector<std::size_t> rank_sorted(const SiteSet& sites, std::vector<std::size_t> subset);

}  // namespace coarsemap::sim
