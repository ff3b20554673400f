#include "coarsemap/sim/circuit.hpp"

#include <algorithm>
#include <numbers>

#include "coarsemap/error.hpp"
#include "tensor.hpp"

namespace coarsemap::sim {

namespace {

std::vector<unsigned> as_positions(std::span<const std::size_t> sites) {
  return {sites.begin(), sites.end()};
}

std::vector<unsigned> positions_in(std::span<const std::size_t> sub, std::span<const std::size_t> support) {
  std::vector<unsigned> out;
  for (std::size_t s : sub) out.push_back(static_cast<unsigned>(std::find(support.begin(), support.end(), s) - support.begin()));
  return out;
}

}  // namespace

Gate make_gate(std::vector<std::size_t> support, CMatrix matrix) {
  if (support.empty()) throw Error(ErrorCode::SpecError, "gate support is empty");
  for (std::size_t a = 0; a < support.size(); ++a)
    for (std::size_t b = a + 1; b < support.size(); ++b)
      if (support[a] == support[b]) throw Error(ErrorCode::SpecError, "gate support repeats a site");
  const Eigen::Index dim = Eigen::Index{1} << support.size();
  if (matrix.rows() != dim || matrix.cols() != dim) {
    throw Error(ErrorCode::DimensionMismatch, "gate matrix dimension is not 2^|support|");
  }
  if (!is_unitary(matrix)) throw Error(ErrorCode::SpecError, "gate matrix is not unitary");
  return {std::move(support), std::move(matrix)};
}

Gate named_gate(const std::string& name, std::vector<std::size_t> support) {
  const double h = std::numbers::sqrt2 / 2;
  CMatrix m;
  if (name == "H" || name == "X" || name == "Y" || name == "Z" || name == "S") {
    if (support.size() != 1) throw Error(ErrorCode::SpecError, "gate " + name + " acts on one site");
    m.resize(2, 2);
    if (name == "H") m << h, h, h, -h;
    if (name == "X") m = pauli_matrix(Pauli::X);
    if (name == "Y") m = pauli_matrix(Pauli::Y);
    if (name == "Z") m = pauli_matrix(Pauli::Z);
    if (name == "S") m << 1, 0, 0, cplx(0, 1);
  } else if (name == "CZ" || name == "CNOT") {
    if (support.size() != 2) throw Error(ErrorCode::SpecError, "gate " + name + " acts on two sites");
    m = CMatrix::Identity(4, 4);
    if (name == "CZ") {
      m(3, 3) = -1;
    } else {
      // index = control + 2 target; flip the target when the control is set
      m(1, 1) = m(3, 3) = 0;
      m(3, 1) = m(1, 3) = 1;
    }
  } else {
    throw Error(ErrorCode::SpecError, "unknown gate '" + name + "'");
  }
  return make_gate(std::move(support), std::move(m));
}

Circuit::Circuit(SiteSet sites, std::vector<std::vector<Gate>> layers) : sites_(std::move(sites)) {
  for (auto& layer : layers) append_layer(std::move(layer));
}

void Circuit::append_layer(std::vector<Gate> layer) {
  std::vector<int> used(size(), 0);
  for (const auto& g : layer) {
    for (std::size_t s : g.support) {
      if (s >= size()) throw Error(ErrorCode::SupportOutOfRange, "gate site out of range");
      if (used[s]++) throw Error(ErrorCode::SpecError, "layer not depth-one");
    }
  }
  layers_.push_back(std::move(layer));
}

Circuit Circuit::permuted(std::span<const std::size_t> perm) const {
  Circuit out(sites_.permuted(perm));
  for (const auto& layer : layers_) {
    std::vector<Gate> moved = layer;
    for (auto& g : moved)
      for (auto& s : g.support) s = perm[s];
    out.layers_.push_back(std::move(moved));
  }
  return out;
}

Circuit compose(const Circuit& a, const Circuit& b) {
  require_same_sites(a.sites(), b.sites());
  Circuit out(a.sites(), a.layers());
  for (const auto& layer : b.layers()) out.append_layer(layer);
  return out;
}

Circuit brickwork(const SiteSet& sites, std::size_t depth, std::mt19937_64& rng) {
  Circuit out(sites);
  for (std::size_t k = 0; k < depth; ++k) {
    std::vector<Gate> layer;
    for (std::size_t i = k % 2; i + 1 < sites.size(); i += 2) layer.push_back(make_gate({i, i + 1}, haar_unitary(4, rng)));
    out.append_layer(std::move(layer));
  }
  return out;
}

Circuit brickwork(const SiteSet& sites, std::size_t depth, const CMatrix& gate) {
  Circuit out(sites);
  for (std::size_t k = 0; k < depth; ++k) {
    std::vector<Gate> layer;
    for (std::size_t i = k % 2; i + 1 < sites.size(); i += 2) layer.push_back(make_gate({i, i + 1}, gate));
    out.append_layer(std::move(layer));
  }
  return out;
}

SpinState circuit_state(const SpinState& base, const Circuit& circ) {
  require_same_sites(base.sites(), circ.sites());
  CVector v = base.amplitudes();
  for (const auto& layer : circ.layers())
    for (const auto& g : layer) detail::apply_to_vector(v, g.matrix, as_positions(g.support));
  return SpinState(base.sites(), std::move(v));
}

CMatrix full_unitary(const Circuit& circ) {
  if (circ.size() > 10) throw Error(ErrorCode::CapExceeded, "dense unitary limited to 10 qubits");
  const Eigen::Index dim = Eigen::Index{1} << circ.size();
  CMatrix u = CMatrix::Identity(dim, dim);
  for (const auto& layer : circ.layers())
    for (const auto& g : layer) detail::apply_left(u, g.matrix, as_positions(g.support));
  return u;
}

EvolvedOperator heisenberg(const Circuit& circ, const EvolvedOperator& a) {
  const SiteSet& sites = circ.sites();
  EvolvedOperator op = embed(a, rank_sorted(sites, a.support));
  for (auto layer = circ.layers().rbegin(); layer != circ.layers().rend(); ++layer) {
    for (const auto& g : *layer) {
      const bool meets = std::any_of(g.support.begin(), g.support.end(), [&](std::size_t s) {
        return std::find(op.support.begin(), op.support.end(), s) != op.support.end();
      });
      if (!meets) continue;
      std::vector<std::size_t> merged = op.support;
      for (std::size_t s : g.support)
        if (std::find(merged.begin(), merged.end(), s) == merged.end()) merged.push_back(s);
      if (merged.size() != op.support.size()) op = embed(op, rank_sorted(sites, merged));
      const auto pos = positions_in(g.support, op.support);
      detail::apply_right(op.matrix, g.matrix, pos);
      detail::apply_left(op.matrix, g.matrix.adjoint(), pos);
    }
  }
  return op;
}

EvolvedOperator heisenberg(const Circuit& circ, std::size_t site, Pauli p) {
  if (site >= circ.size()) throw Error(ErrorCode::SupportOutOfRange, "site out of range");
  return heisenberg(circ, single_site(p, site));
}

}  // namespace coarsemap::sim
