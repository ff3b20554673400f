#include "coarsemap/sim/ising.hpp"

#include <cmath>
#include <cstdint>
#include <vector>

#include "coarsemap/error.hpp"

namespace coarsemap::sim {

namespace {

void check(std::size_t n, double beta_j) {
  if (n < 2) throw Error(ErrorCode::InvalidArgument, "chain needs at least 2 sites");
  if (!(beta_j > 0.0) || !std::isfinite(beta_j)) throw Error(ErrorCode::InvalidArgument, "betaJ must be positive");
}

}  // namespace

DecayMatrix ising_1d_corr(std::size_t n, double beta_j) {
  check(n, beta_j);
  const double t = std::tanh(beta_j);
  return tabulate_decay(SiteSet::range(n), [&](std::size_t i, std::size_t j) {
    return std::pow(t, static_cast<double>(i > j ? i - j : j - i));
  });
}

DecayMatrix ising_1d_corr_enumerated(std::size_t n, double beta_j) {
  check(n, beta_j);
  if (n > 20) throw Error(ErrorCode::CapExceeded, "enumeration limited to 20 sites");
  std::vector<double> ss(n * n, 0.0), s(n, 0.0);
  double z = 0.0;
  std::vector<double> spin(n);
  for (std::uint64_t c = 0; c < (std::uint64_t{1} << n); ++c) {
    double energy = 0.0;
    for (std::size_t k = 0; k < n; ++k) spin[k] = ((c >> k) & 1) ? -1.0 : 1.0;
    for (std::size_t k = 0; k + 1 < n; ++k) energy += spin[k] * spin[k + 1];
    const double w = std::exp(beta_j * energy);
    z += w;
    for (std::size_t i = 0; i < n; ++i) {
      s[i] += w * spin[i];
      for (std::size_t j = 0; j < n; ++j) ss[i * n + j] += w * spin[i] * spin[j];
    }
  }
  std::vector<double> cov(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) cov[i * n + j] = std::abs(ss[i * n + j] / z - (s[i] / z) * (s[j] / z));
  return build_decay_matrix(cov, SiteSet::range(n), true);
}

}  // namespace coarsemap::sim
