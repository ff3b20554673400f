#pragma once

#include <cstddef>
#include <vector>

#include "coarsemap/path_metric.hpp"
#include "coarsemap/sim/circuit.hpp"
#include "coarsemap/sim/correlation.hpp"

namespace coarsemap::sim {

/// max over Paulis a at x, b at y of ||[alpha(a), b]||; exactly 0 when y is
/// outside the tracked support of every alpha(a).
double commutator_pauli(const Circuit& circ, std::size_t x, std::size_t y);

/// Alternating maximization of ||[alpha(a), b]|| over unit-norm a at x and b
/// at y, bracketed by [pauli, 9 pauli].
CorrEstimate commutator_exact(const Circuit& circ, std::size_t x, std::size_t y, const OptimizerOptions& options = {});

/// Q(x, y), max-symmetrized. Exact mode records the brackets of both
/// orientations.
MatrixResult commutator_matrix(const Circuit& circ, Mode mode = Mode::Pauli, const OptimizerOptions& options = {});

/// For each r: max over Paulis a at x of ||alpha(a) - E_{B_r(x)}(alpha(a))||.
std::vector<double> spread_profile(const Circuit& circ, std::size_t x, const std::vector<Distance>& radii,
                                   const PathMetric& metric);

/// Sites of the tracked light cone of x (union over the three Paulis).
std::vector<std::size_t> light_cone(const Circuit& circ, std::size_t x);

}  // namespace coarsemap::sim
