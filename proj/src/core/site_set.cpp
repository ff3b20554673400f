#include "coarsemap/site_set.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "coarsemap/error.hpp"

namespace coarsemap {

SiteSet::SiteSet(std::vector<std::string> ids, std::optional<std::vector<Coord>> coords)
    : ids_(std::move(ids)), coords_(std::move(coords)) {
  if (ids_.empty()) throw Error(ErrorCode::InvalidArgument, "site set must be nonempty");
  std::unordered_set<std::string> seen;
  for (const auto& id : ids_) {
    if (!seen.insert(id).second) throw Error(ErrorCode::InvalidArgument, "duplicate site id '" + id + "'");
  }
  if (coords_ && coords_->size() != ids_.size()) {
    throw Error(ErrorCode::InvalidArgument, "coordinate list length differs from site count");
  }
  order_.resize(ids_.size());
  std::iota(order_.begin(), order_.end(), std::size_t{0});
  std::sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) { return ids_[a] < ids_[b]; });
  rank_.resize(ids_.size());
  for (std::size_t r = 0; r < order_.size(); ++r) rank_[order_[r]] = r;
}

SiteSet SiteSet::range(std::size_t n) {
  std::vector<std::string> ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = std::to_string(i);
  return SiteSet(std::move(ids));
}

SiteSet SiteSet::grid(std::size_t width, std::size_t height) {
  std::vector<std::string> ids;
  std::vector<Coord> coords;
  ids.reserve(width * height);
  coords.reserve(width * height);
  for (std::size_t y = 0; y < height; ++y) {
    for (std::size_t x = 0; x < width; ++x) {
      ids.push_back(std::to_string(x) + "_" + std::to_string(y));
      coords.push_back({static_cast<int>(x), static_cast<int>(y)});
    }
  }
  return SiteSet(std::move(ids), std::move(coords));
}

const std::vector<Coord>& SiteSet::coords() const {
  if (!coords_) throw Error(ErrorCode::InvalidArgument, "site set has no coordinates");
  return *coords_;
}

std::optional<std::size_t> SiteSet::find(const std::string& id) const {
  auto it = std::lower_bound(order_.begin(), order_.end(), id,
                             [&](std::size_t i, const std::string& key) { return ids_[i] < key; });
  if (it != order_.end() && ids_[*it] == id) return *it;
  return std::nullopt;
}

SiteSet SiteSet::permuted(std::span<const std::size_t> perm) const {
  if (perm.size() != size()) throw Error(ErrorCode::DimensionMismatch, "permutation length differs from site count");
  std::vector<std::string> ids(size());
  std::optional<std::vector<Coord>> coords;
  if (coords_) coords.emplace(size());
  for (std::size_t i = 0; i < size(); ++i) {
    ids.at(perm[i]) = ids_[i];
    if (coords_) (*coords)[perm[i]] = (*coords_)[i];
  }
  return SiteSet(std::move(ids), std::move(coords));
}

void require_same_sites(const SiteSet& a, const SiteSet& b) {
  if (!(a == b)) throw Error(ErrorCode::SiteSetMismatch, "operands are defined on different site sets");
}

std::vector<std::size_t> invert_permutation(std::span<const std::size_t> perm) {
  std::vector<std::size_t> inv(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) inv.at(perm[i]) = i;
  return inv;
}

}  // namespace coarsemap
