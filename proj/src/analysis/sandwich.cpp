#include "coarsemap/analysis/sandwich.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "coarsemap/error.hpp"
#include "coarsemap/relation.hpp"

namespace coarsemap::analysis {

std::string_view to_string(TailKind kind) { return kind == TailKind::Correlation ? "correlation" : "dynamical"; }

double sandwich_constant(TailKind kind) { return kind == TailKind::Correlation ? 3.0 : 2.0; }

SandwichVerdict sandwich_check(const DecayMatrix& f, const DecayMatrix& g, double eps, TailKind kind,
                               std::size_t max_words, std::optional<double> delta) {
  require_same_sites(f.sites(), g.sites());
  if (!(eps > 0.0)) throw Error(ErrorCode::NonPositiveEpsilon, "epsilon must be positive");
  if (max_words < 1) throw Error(ErrorCode::InvalidArgument, "max_words must be at least 1");
  SandwichVerdict v;
  v.c = sandwich_constant(kind);
  v.delta = delta ? *delta : sup_distance(f, g) / v.c;
  if (!(v.delta >= 0.0) || !std::isfinite(v.delta)) throw Error(ErrorCode::InvalidArgument, "delta must be >= 0");
  const double margin = v.c * v.delta;
  if (!(eps > margin)) throw Error(ErrorCode::EpsilonTooSmall, "epsilon must exceed c * delta");

  const double scale = std::max({1.0, eps, f.max_off_diagonal(), g.max_off_diagonal()});
  const double slack = 8.0 * std::numeric_limits<double>::epsilon() * scale;
  v.eps_up = eps + margin + slack;
  v.eps_down = std::max(eps - margin - slack, std::nextafter(0.0, 1.0));

  const Relation f_up = epsilon_graph(f, v.eps_up);
  const Relation g_eps = epsilon_graph(g, eps);
  const Relation f_down = epsilon_graph(f, v.eps_down);
  v.upper = in_generated(f_up, std::span(&g_eps, 1), max_words);
  v.lower = in_generated(g_eps, std::span(&f_down, 1), max_words);
  return v;
}

}  // namespace coarsemap::analysis
