#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "coarsemap/sim/linalg.hpp"
#include "coarsemap/sim/pauli.hpp"
#include "coarsemap/sim/state.hpp"

namespace coarsemap::sim {

/// Operator acting on `support` (local bit q <-> support[q]) tensored with
/// the identity elsewhere.
struct EvolvedOperator {
  std::vector<std::size_t> support;
  CMatrix matrix;
};

EvolvedOperator single_site(Pauli p, std::size_t site);
/// Same operator written on a larger support (every old site must appear).
EvolvedOperator embed(const EvolvedOperator& op, std::span<const std::size_t> support);

/// <psi| a |psi>, contracting over the operator's support only.
cplx expectation(const SpinState& psi, const EvolvedOperator& op);

/// tr over the sites of op.support not in `keep`; the result acts on `keep`
/// in the order given (which must be a subset of the support).
CMatrix partial_trace(const EvolvedOperator& op, std::span<const std::size_t> keep);

/// Trace-preserving conditional expectation onto the algebra of `region`:
/// (tr_C a / 2^|C|) tensor 1_C with C = support \ region. The result is
/// written on the original support.
EvolvedOperator conditional_expectation(const EvolvedOperator& op, std::span<const std::size_t> region);

}  // namespace coarsemap::sim
