#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "coarsemap/site_set.hpp"

namespace coarsemap {

/// Symmetric nonnegative table f: X x X -> R+. The diagonal is stored but
/// never read by downstream operations.
class DecayMatrix {
 public:
  DecayMatrix() = default;

  const SiteSet& sites() const noexcept { return sites_; }
  std::size_t size() const noexcept { return sites_.size(); }
  double operator()(std::size_t i, std::size_t j) const { return values_[i * size() + j]; }
  const std::vector<double>& values() const noexcept { return values_; }

  /// Largest off-diagonal entry, 0 for a single site.
  double max_off_diagonal() const;

  /// Relabelled copy (site i becomes perm[i]).
  DecayMatrix permuted(std::span<const std::size_t> perm) const;

  friend bool operator==(const DecayMatrix& a, const DecayMatrix& b) {
    return a.sites_ == b.sites_ && a.values_ == b.values_;
  }

 private:
  friend DecayMatrix build_decay_matrix(std::span<const double>, const SiteSet&, bool);
  DecayMatrix(SiteSet sites, std::vector<double> values) : sites_(std::move(sites)), values_(std::move(values)) {}

  SiteSet sites_;
  std::vector<double> values_;
};

/// Validates a row-major n x n table and produces a DecayMatrix.
///
/// With `symmetrize` the off-diagonal pairs become max(raw[i][j], raw[j][i]);
/// without it the input must already be symmetric to within 1e-12 (the
/// upper triangle is then mirrored so the result is exactly symmetric).
DecayMatrix build_decay_matrix(std::span<const double> raw, const SiteSet& sites, bool symmetrize);
DecayMatrix build_decay_matrix(const std::vector<std::vector<double>>& raw, const SiteSet& sites, bool symmetrize);

/// Builds the matrix f(i, j) = fn(i, j) for i != j (diagonal 0).
template <class Fn>
DecayMatrix tabulate_decay(const SiteSet& sites, Fn&& fn) {
  const std::size_t n = sites.size();
  std::vector<double> raw(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) raw[i * n + j] = fn(i, j);
  return build_decay_matrix(raw, sites, true);
}

/// sup over off-diagonal pairs of |f - g|.
double sup_distance(const DecayMatrix& f, const DecayMatrix& g);

/// Distinct positive off-diagonal values in strictly decreasing order.
class Filtration {
 public:
  explicit Filtration(const DecayMatrix& matrix);

  const DecayMatrix& matrix() const noexcept { return matrix_; }
  const std::vector<double>& thresholds() const noexcept { return thresholds_; }

 private:
  DecayMatrix matrix_;
  std::vector<double> thresholds_;
};

}  // namespace coarsemap
