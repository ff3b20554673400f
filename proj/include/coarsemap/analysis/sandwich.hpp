#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "coarsemap/decay_matrix.hpp"

namespace coarsemap::analysis {

/// c = 3 for correlation tails, 2 for dynamical tails.
enum class TailKind { Correlation, Dynamical };
std::string_view to_string(TailKind kind);
double sandwich_constant(TailKind kind);

struct SandwichVerdict {
  double delta = 0.0;
  double c = 0.0;
  double eps_up = 0.0;
  double eps_down = 0.0;
  /// E_{f, eps + c delta} in <E_{g, eps}>.
  bool upper = false;
  /// E_{g, eps} in <E_{f, eps - c delta}>.
  bool lower = false;

  bool holds() const noexcept { return upper && lower; }
};

/// Both inclusions of the stability sandwich, tested with in_generated.
///
/// Without an explicit delta it is inferred as sup|f - g| / c. Thresholds
/// are moved outward by 8 ulp of the largest magnitude involved, so that
/// pairs sitting exactly on a threshold are not lost to rounding of
/// eps +- c delta. Throws EpsilonTooSmall unless eps > c delta.
SandwichVerdict sandwich_check(const DecayMatrix& f, const DecayMatrix& g, double eps, TailKind kind,
                               std::size_t max_words, std::optional<double> delta = std::nullopt);

}  // namespace coarsemap::analysis
