#include "coarsemap/relation.hpp"

#include "coarsemap/error.hpp"

namespace coarsemap {

Relation::Relation(SiteSet sites) : sites_(std::move(sites)), adj_(sites_.size() * sites_.size(), 0) {
  for (std::size_t i = 0; i < size(); ++i) insert(i, i);
}

Relation::Relation(SiteSet sites, std::vector<std::uint8_t> adj) : sites_(std::move(sites)), adj_(std::move(adj)) {
  if (adj_.size() != size() * size()) throw Error(ErrorCode::DimensionMismatch, "adjacency table is not n x n");
  for (auto& v : adj_) v = v ? 1 : 0;
  for (std::size_t i = 0; i < size(); ++i) insert(i, i);
}

Relation Relation::complete(const SiteSet& sites) {
  return Relation(sites, std::vector<std::uint8_t>(sites.size() * sites.size(), 1));
}

Relation Relation::from_edges(const SiteSet& sites, std::span<const std::pair<std::size_t, std::size_t>> edges) {
  Relation r(sites);
  for (auto [a, b] : edges) {
    if (a >= r.size() || b >= r.size()) throw Error(ErrorCode::SupportOutOfRange, "edge endpoint out of range");
    r.insert(a, b);
    r.insert(b, a);
  }
  return r;
}

std::size_t Relation::edge_count() const {
  std::size_t count = 0;
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j)
      if (contains(i, j) || contains(j, i)) ++count;
  return count;
}

bool Relation::is_symmetric() const {
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = i + 1; j < size(); ++j)
      if (contains(i, j) != contains(j, i)) return false;
  return true;
}

std::vector<std::size_t> Relation::image(std::size_t x) const {
  std::vector<std::size_t> out;
  for (std::size_t y = 0; y < size(); ++y)
    if (contains(x, y)) out.push_back(y);
  return out;
}

bool Relation::subset_of(const Relation& other) const {
  require_same_sites(sites_, other.sites_);
  for (std::size_t k = 0; k < adj_.size(); ++k)
    if (adj_[k] && !other.adj_[k]) return false;
  return true;
}

Relation Relation::permuted(std::span<const std::size_t> perm) const {
  const std::size_t n = size();
  std::vector<std::uint8_t> adj(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) adj[perm[i] * n + perm[j]] = adj_[i * n + j];
  return Relation(sites_.permuted(perm), std::move(adj));
}

Relation epsilon_graph(const DecayMatrix& f, double eps) {
  if (!(eps > 0.0)) throw Error(ErrorCode::NonPositiveEpsilon, "epsilon must be positive");
  Relation r(f.sites());
  const std::size_t n = f.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && f(i, j) >= eps) r.insert(i, j);
  return r;
}

Relation compose(const Relation& e, const Relation& f) {
  require_same_sites(e.sites(), f.sites());
  const std::size_t n = e.size();
  Relation out(e.sites());
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      if (!e.contains(x, y)) continue;
      for (std::size_t z = 0; z < n; ++z)
        if (f.contains(y, z)) out.insert(x, z);
    }
  return out;
}

Relation inverse(const Relation& e) {
  Relation out(e.sites());
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = 0; j < e.size(); ++j)
      if (e.contains(i, j)) out.insert(j, i);
  return out;
}

Relation unite(const Relation& e, const Relation& f) {
  require_same_sites(e.sites(), f.sites());
  Relation out(e.sites());
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = 0; j < e.size(); ++j)
      if (e.contains(i, j) || f.contains(i, j)) out.insert(i, j);
  return out;
}

namespace {

Relation saturate(const SiteSet& sites, std::span<const Relation> generators) {
  Relation u(sites);
  for (const auto& g : generators) {
    require_same_sites(sites, g.sites());
    u = unite(u, unite(g, inverse(g)));
  }
  return u;
}

}  // namespace

bool in_generated(const Relation& e, std::span<const Relation> generators, std::size_t max_words) {
  if (max_words < 1) throw Error(ErrorCode::InvalidArgument, "max_words must be at least 1");
  const Relation u = saturate(e.sites(), generators);
  Relation power = u;
  if (e.subset_of(power)) return true;
  for (std::size_t k = 2; k <= max_words; ++k) {
    Relation next = compose(power, u);
    if (next == power) return false;
    power = std::move(next);
    if (e.subset_of(power)) return true;
  }
  return false;
}

Relation generated_closure(std::span<const Relation> generators) {
  if (generators.empty()) throw Error(ErrorCode::InvalidArgument, "no generators");
  const Relation u = saturate(generators.front().sites(), generators);
  Relation power = u;
  for (;;) {
    Relation next = compose(power, power);
    if (next == power) return power;
    power = std::move(next);
  }
}

}  // namespace coarsemap
