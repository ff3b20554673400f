#pragma once

#include <cstddef>
#include <functional>
#include <span>

#include "coarsemap/relation.hpp"

namespace coarsemap {

/// f~(F, G) evaluated on two site subsets.
using SetDecay = std::function<double(std::span<const std::size_t>, std::span<const std::size_t>)>;

struct ClosureResult {
  Relation relation;
  std::size_t iterations = 0;
  bool converged = false;
};

/// Iterates E -> <E, {(x, y) : f~(E[x], E[y]) >= eps}> until nothing new is
/// added. Pairs whose images overlap are already controlled through E o E^-1
/// and are not queried. A non-converged result carries converged = false.
ClosureResult higher_order_closure(const SetDecay& ftilde, const Relation& e0, double eps, std::size_t max_iter);

/// f~(F, G) = max over x in F, y in G, x != y of f(x, y).
SetDecay pointwise_set_decay(const DecayMatrix& f);

}  // namespace coarsemap
