#pragma once

#include <cstddef>

#include "coarsemap/decay_matrix.hpp"

namespace coarsemap::sim {

/// Spin-spin covariance of the zero-field open classical Ising chain,
/// C(i, j) = tanh(betaJ)^|i - j|.
DecayMatrix ising_1d_corr(std::size_t n, double beta_j);

/// Same quantity by summing all 2^n configurations (n <= 20).
DecayMatrix ising_1d_corr_enumerated(std::size_t n, double beta_j);

}  // namespace coarsemap::sim
