#pragma once

#include <cstddef>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "coarsemap/sim/linalg.hpp"
#include "coarsemap/sim/operator.hpp"
#include "coarsemap/sim/state.hpp"
#include "coarsemap/site_set.hpp"

namespace coarsemap::sim {

/// Local unitary; matrix index bit q <-> support[q].
struct Gate {
  std::vector<std::size_t> support;
  CMatrix matrix;
};

/// Validates distinct support sites and unitarity (1e-10).
Gate make_gate(std::vector<std::size_t> support, CMatrix matrix);
/// "H", "X", "Y", "Z", "S" on one site; "CZ", "CNOT" (control first) on two.
Gate named_gate(const std::string& name, std::vector<std::size_t> support);

/// Layers of gates with pairwise disjoint supports. Layer 0 acts first on
/// states: U = L_{D-1} ... L_0.
class Circuit {
 public:
  explicit Circuit(SiteSet sites, std::vector<std::vector<Gate>> layers = {});

  const SiteSet& sites() const noexcept { return sites_; }
  std::size_t size() const noexcept { return sites_.size(); }
  const std::vector<std::vector<Gate>>& layers() const noexcept { return layers_; }
  std::size_t depth() const noexcept { return layers_.size(); }

  void append_layer(std::vector<Gate> layer);
  Circuit permuted(std::span<const std::size_t> perm) const;

 private:
  SiteSet sites_;
  std::vector<std::vector<Gate>> layers_;
};

/// First `a`, then `b` (on states): U = U_b U_a. In the Heisenberg picture
/// alpha_{compose(a,b)} = alpha_a o alpha_b.
Circuit compose(const Circuit& a, const Circuit& b);

/// Nearest-neighbour brickwork on the site order 0..n-1: layer k couples
/// (i, i+1) for i = k mod 2, k mod 2 + 2, ... with Haar-random gates.
Circuit brickwork(const SiteSet& sites, std::size_t depth, std::mt19937_64& rng);
/// Brickwork with a fixed two-site gate everywhere.
Circuit brickwork(const SiteSet& sites, std::size_t depth, const CMatrix& gate);

/// U |psi> (Schroedinger picture of phi o alpha).
SpinState circuit_state(const SpinState& base, const Circuit& circ);

/// Dense U for small systems (n <= 10).
CMatrix full_unitary(const Circuit& circ);

/// alpha(a) = U^dagger a U, conjugating by the last layer first. The support
/// grows only through gates that meet it and stays sorted by label.
EvolvedOperator heisenberg(const Circuit& circ, const EvolvedOperator& a);
EvolvedOperator heisenberg(const Circuit& circ, std::size_t site, Pauli p);

}  // namespace coarsemap::sim
