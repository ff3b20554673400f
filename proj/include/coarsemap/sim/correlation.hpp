#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "coarsemap/decay_matrix.hpp"
#include "coarsemap/path_metric.hpp"
#include "coarsemap/sim/operator.hpp"
#include "coarsemap/sim/state.hpp"

namespace coarsemap::sim {

/// Certified bracket around a supremum that is only estimated.
struct CorrEstimate {
  double value = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  std::size_t restarts_used = 0;
  bool converged = true;
};

struct OptimizerOptions {
  std::size_t restarts = 8;
  double tol = 1e-9;
  std::size_t max_iter = 500;
  std::uint64_t seed = 0;
  std::size_t subset_cap = 3;
};

/// K on x_set with phi(ab) - phi(a) phi(b) = tr(K a) for every a on x_set.
/// x_set is taken in the order given (local bit q <-> x_set[q]).
CMatrix reduced_covariance_operator(const SpinState& psi, std::span<const std::size_t> x_set, const EvolvedOperator& b);

/// max over non-identity Pauli words P on F, Q on G of |<PQ> - <P><Q>|.
double corr_pauli(const SpinState& psi, std::span<const std::size_t> f, std::span<const std::size_t> g,
                  std::size_t subset_cap = 3);

/// Alternating trace-norm maximization of sup |phi(ab) - phi(a)phi(b)| over
/// unit-norm a on F, b on G. The first start is the best Pauli pair, the
/// others random unitaries seeded from (seed, labels, restart).
CorrEstimate corr_exact(const SpinState& psi, std::span<const std::size_t> f, std::span<const std::size_t> g,
                        const OptimizerOptions& options = {});

enum class Mode { Pauli, Exact };

struct PairEstimate {
  std::size_t x;
  std::size_t y;
  CorrEstimate estimate;
};

struct MatrixResult {
  DecayMatrix matrix;
  /// Exact mode only: one bracket per evaluated pair.
  std::vector<PairEstimate> brackets;
};

struct CorrMatrixOptions {
  Mode mode = Mode::Pauli;
  /// 0 for point correlations; otherwise balls B_r(x) of `metric` (or of the
  /// lattice graph of the site coordinates).
  Distance radius = 0;
  std::optional<PathMetric> metric;
  OptimizerOptions optimizer{};
};

/// C(x, y) for all pairs; ball pairs that overlap get the largest value seen
/// on disjoint pairs.
MatrixResult corr_matrix(const SpinState& psi, const CorrMatrixOptions& options = {});

}  // namespace coarsemap::sim
