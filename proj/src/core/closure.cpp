#include "coarsemap/closure.hpp"

#include <algorithm>
#include <array>

#include "coarsemap/error.hpp"

namespace coarsemap {

namespace {

bool disjoint(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  // images are produced in increasing index order
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return false;
    (*i < *j) ? ++i : ++j;
  }
  return true;
}

}  // namespace

ClosureResult higher_order_closure(const SetDecay& ftilde, const Relation& e0, double eps, std::size_t max_iter) {
  if (!(eps > 0.0)) throw Error(ErrorCode::NonPositiveEpsilon, "epsilon must be positive");
  const std::size_t n = e0.size();
  ClosureResult out{e0, 0, false};
  while (out.iterations < max_iter) {
    std::vector<std::vector<std::size_t>> images(n);
    for (std::size_t x = 0; x < n; ++x) images[x] = out.relation.image(x);
    Relation t(e0.sites());
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = x + 1; y < n; ++y) {
        if (!disjoint(images[x], images[y])) continue;
        // the oracle is symmetric, so query in label order for equivariance
        const bool flip = e0.sites().rank(y) < e0.sites().rank(x);
        const auto& a = flip ? images[y] : images[x];
        const auto& b = flip ? images[x] : images[y];
        if (ftilde(a, b) >= eps) {
          t.insert(x, y);
          t.insert(y, x);
        }
      }
    ++out.iterations;
    if (t.subset_of(out.relation)) {
      out.converged = true;
      return out;
    }
    const std::array<Relation, 2> gens{out.relation, t};
    out.relation = generated_closure(gens);
  }
  return out;
}

SetDecay pointwise_set_decay(const DecayMatrix& f) {
  return [f](std::span<const std::size_t> a, std::span<const std::size_t> b) {
    double best = 0.0;
    for (std::size_t x : a)
      for (std::size_t y : b)
        if (x != y) best = std::max(best, f(x, y));
    return best;
  };
}

}  // namespace coarsemap
