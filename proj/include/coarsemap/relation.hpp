#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "coarsemap/decay_matrix.hpp"
#include "coarsemap/site_set.hpp"

namespace coarsemap {

/// Controlled set E subset of X x X as a dense boolean matrix. The diagonal
/// is always present (reflexive closure on construction).
class Relation {
 public:
  Relation() = default;
  /// Diagonal-only relation.
  explicit Relation(SiteSet sites);
  /// From a row-major n x n boolean table.
  Relation(SiteSet sites, std::vector<std::uint8_t> adj);

  static Relation diagonal(const SiteSet& sites) { return Relation(sites); }
  static Relation complete(const SiteSet& sites);
  /// Undirected graph relation from an edge list.
  static Relation from_edges(const SiteSet& sites, std::span<const std::pair<std::size_t, std::size_t>> edges);

  const SiteSet& sites() const noexcept { return sites_; }
  std::size_t size() const noexcept { return sites_.size(); }
  bool contains(std::size_t i, std::size_t j) const { return adj_[i * size() + j] != 0; }
  void insert(std::size_t i, std::size_t j) { adj_[i * size() + j] = 1; }

  /// Off-diagonal pairs (i, j) with i < j present in either orientation.
  std::size_t edge_count() const;
  bool is_symmetric() const;
  /// E[x] = {y : (x, y) in E}.
  std::vector<std::size_t> image(std::size_t x) const;

  bool subset_of(const Relation& other) const;
  Relation permuted(std::span<const std::size_t> perm) const;

  friend bool operator==(const Relation& a, const Relation& b) { return a.sites_ == b.sites_ && a.adj_ == b.adj_; }

 private:
  SiteSet sites_;
  std::vector<std::uint8_t> adj_;
};

/// E_{f,eps} = {(x, y) : x = y or f(x, y) >= eps}.
Relation epsilon_graph(const DecayMatrix& f, double eps);

/// E o F = {(x, z) : exists y with (x, y) in E and (y, z) in F}.
Relation compose(const Relation& e, const Relation& f);
Relation inverse(const Relation& e);
Relation unite(const Relation& e, const Relation& f);

/// True iff E is contained in a composition of at most `max_words` factors
/// drawn from the saturated union of the generators and their inverses.
bool in_generated(const Relation& e, std::span<const Relation> generators, std::size_t max_words);

/// Largest finite representative of the coarse structure generated by the
/// given relations: the union of all finite words, i.e. the fixpoint of
/// repeated composition (an equivalence relation).
Relation generated_closure(std::span<const Relation> generators);

}  // namespace coarsemap
