#pragma once

#include <cstddef>
#include <vector>

#include "coarsemap/sim/circuit.hpp"
#include "coarsemap/sim/state.hpp"

namespace coarsemap::sim {

/// Applies u on `region` (bit q of u <-> region[q]).
SpinState apply_localized_perturbation(const SpinState& target, const std::vector<std::size_t>& region, const CMatrix& u);
/// Appends the depth-one layer {u on region}.
Circuit apply_localized_perturbation(const Circuit& target, const std::vector<std::size_t>& region, const CMatrix& u);

}  // namespace coarsemap::sim
