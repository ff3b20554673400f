#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace coarsemap {

using Coord = std::vector<int>;

/// Finite set of labelled sites, optionally carrying lattice coordinates.
///
/// Labels travel with the data under relabelling. Every internal loop whose
/// floating-point result depends on visiting order iterates in canonical
/// order (sorted by label), which makes all pipelines exactly equivariant
/// under site permutations.
class SiteSet {
 public:
  SiteSet() = default;
  explicit SiteSet(std::vector<std::string> ids, std::optional<std::vector<Coord>> coords = std::nullopt);

  /// Sites labelled "0" ... "n-1".
  static SiteSet range(std::size_t n);
  /// Row-major width x height lattice with coordinates (x, y).
  static SiteSet grid(std::size_t width, std::size_t height);

  std::size_t size() const noexcept { return ids_.size(); }
  const std::vector<std::string>& ids() const noexcept { return ids_; }
  const std::string& id(std::size_t i) const { return ids_.at(i); }
  bool has_coords() const noexcept { return coords_.has_value(); }
  const std::vector<Coord>& coords() const;

  /// Position of site i in label order.
  std::size_t rank(std::size_t i) const { return rank_.at(i); }
  /// Site indices sorted by label.
  const std::vector<std::size_t>& canonical_order() const noexcept { return order_; }
  std::optional<std::size_t> find(const std::string& id) const;

  /// Relabelled copy: site i of *this becomes site perm[i] of the result.
  SiteSet permuted(std::span<const std::size_t> perm) const;

  friend bool operator==(const SiteSet& a, const SiteSet& b) { return a.ids_ == b.ids_; }

 private:
  std::vector<std::string> ids_;
  std::optional<std::vector<Coord>> coords_;
  std::vector<std::size_t> rank_;
  std::vector<std::size_t> order_;
};

/// Throws SiteSetMismatch unless both sets carry identical labels.
void require_same_sites(const SiteSet& a, const SiteSet& b);

/// Inverse of a permutation given as perm[old] = new.
std::vector<std::size_t> invert_permutation(std::span<const std::size_t> perm);

}  // namespace coarsemap
