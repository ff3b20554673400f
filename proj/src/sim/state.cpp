#include "coarsemap/sim/state.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "coarsemap/error.hpp"
#include "tensor.hpp"

namespace coarsemap::sim {

namespace {

void check_cap(std::size_t n, std::size_t cap) {
  if (n > cap) throw Error(ErrorCode::CapExceeded, std::to_string(n) + " qubits exceed the cap of " + std::to_string(cap));
}

Eigen::Index dimension(std::size_t n) { return Eigen::Index{1} << n; }

}  // namespace

SpinState::SpinState(SiteSet sites, CVector amplitudes) : sites_(std::move(sites)), amp_(std::move(amplitudes)) {
  if (sites_.size() >= 40 || amp_.size() != dimension(sites_.size())) {
    throw Error(ErrorCode::DimensionMismatch, "amplitude vector length is not 2^n");
  }
  if (std::abs(amp_.norm() - 1.0) > 1e-12) throw Error(ErrorCode::InvalidArgument, "state is not normalized");
}

SpinState SpinState::permuted(std::span<const std::size_t> perm) const {
  const std::size_t n = size();
  std::vector<unsigned> target(n);
  for (std::size_t k = 0; k < n; ++k) target[k] = static_cast<unsigned>(perm[k]);
  const auto offs = detail::BitEnumerator(target);
  CVector out(amp_.size());
  for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(amp_.size()); ++i) out(static_cast<Eigen::Index>(offs[i])) = amp_(static_cast<Eigen::Index>(i));
  SpinState s;
  s.sites_ = sites_.permuted(perm);
  s.amp_ = std::move(out);
  return s;
}

LocalState LocalState::named(const std::string& name) {
  constexpr double pi = std::numbers::pi;
  if (name == "0") return {0.0, 0.0};
  if (name == "1") return {pi, 0.0};
  if (name == "+") return {pi / 2, 0.0};
  if (name == "-") return {pi / 2, pi};
  if (name == "+i") return {pi / 2, pi / 2};
  if (name == "-i") return {pi / 2, -pi / 2};
  throw Error(ErrorCode::SpecError, "unknown local state '" + name + "'");
}

SpinState product_state(const SiteSet& sites, std::span<const LocalState> factors, std::size_t cap) {
  const std::size_t n = sites.size();
  check_cap(n, cap);
  if (factors.size() != n) throw Error(ErrorCode::DimensionMismatch, "one local state per site required");
  CVector amp(dimension(n));
  for (Eigen::Index i = 0; i < amp.size(); ++i) {
    cplx a = 1.0;
    for (std::size_t k = 0; k < n; ++k) {
      const auto& f = factors[k];
      a *= ((i >> k) & 1) ? std::polar(std::sin(f.theta / 2), f.phi) : cplx(std::cos(f.theta / 2), 0.0);
    }
    amp(i) = a;
  }
  return SpinState(sites, amp);
}

SpinState ghz_state(const SiteSet& sites, std::size_t cap) {
  check_cap(sites.size(), cap);
  CVector amp = CVector::Zero(dimension(sites.size()));
  amp(0) = amp(amp.size() - 1) = std::numbers::sqrt2 / 2;
  return SpinState(sites, amp);
}

SpinState bell_pairs_state(const SiteSet& sites, std::span<const std::pair<std::size_t, std::size_t>> pairs,
                           std::size_t cap) {
  const std::size_t n = sites.size();
  check_cap(n, cap);
  std::vector<int> used(n, 0);
  for (auto [a, b] : pairs) {
    if (a >= n || b >= n) throw Error(ErrorCode::SupportOutOfRange, "pair site out of range");
    if (a == b || used[a]++ || used[b]++) throw Error(ErrorCode::OverlappingSupports, "pairs must be disjoint");
  }
  CVector amp = CVector::Zero(dimension(n));
  const double w = std::pow(std::numbers::sqrt2 / 2, static_cast<double>(pairs.size()));
  for (std::uint64_t c = 0; c < (std::uint64_t{1} << pairs.size()); ++c) {
    std::uint64_t idx = 0;
    for (std::size_t p = 0; p < pairs.size(); ++p)
      if ((c >> p) & 1) idx |= (std::uint64_t{1} << pairs[p].first) | (std::uint64_t{1} << pairs[p].second);
    amp(static_cast<Eigen::Index>(idx)) = w;
  }
  return SpinState(sites, amp);
}

SpinState cluster_state(const Relation& graph, std::size_t cap) {
  const std::size_t n = graph.size();
  check_cap(n, cap);
  CVector amp(dimension(n));
  const double w = std::pow(std::numbers::sqrt2 / 2, static_cast<double>(n));
  for (Eigen::Index i = 0; i < amp.size(); ++i) {
    int sign = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if ((graph.contains(a, b) || graph.contains(b, a)) && ((i >> a) & 1) && ((i >> b) & 1)) sign ^= 1;
    amp(i) = sign ? -w : w;
  }
  return SpinState(graph.sites(), amp);
}

SpinState ising_coherent_state(const SiteSet& sites, double beta_j, std::size_t cap) {
  const std::size_t n = sites.size();
  check_cap(n, cap);
  CVector amp(dimension(n));
  for (Eigen::Index i = 0; i < amp.size(); ++i) {
    double energy = 0.0;
    for (std::size_t k = 0; k + 1 < n; ++k) {
      const double s0 = ((i >> k) & 1) ? -1.0 : 1.0;
      const double s1 = ((i >> (k + 1)) & 1) ? -1.0 : 1.0;
      energy += s0 * s1;
    }
    amp(i) = std::exp(0.5 * beta_j * energy);
  }
  return SpinState(sites, amp / amp.norm());
}

CMatrix reduced_density(const SpinState& psi, std::span<const std::size_t> support) {
  const SiteSet& sites = psi.sites();
  const std::size_t n = sites.size();
  std::vector<unsigned> keep;
  std::vector<int> in_support(n, 0);
  for (std::size_t s : support) {
    if (s >= n) throw Error(ErrorCode::SupportOutOfRange, "support site out of range");
    if (in_support[s]++) throw Error(ErrorCode::InvalidArgument, "support lists a site twice");
    keep.push_back(static_cast<unsigned>(s));
  }
  std::vector<unsigned> rest;
  for (std::size_t s : sites.canonical_order())
    if (!in_support[s]) rest.push_back(static_cast<unsigned>(s));
  const auto offs = detail::scatter_offsets(keep);
  const detail::BitEnumerator outer(rest);
  const Eigen::Index k = static_cast<Eigen::Index>(offs.size());
  const CVector& amp = psi.amplitudes();
  CMatrix rho = CMatrix::Zero(k, k);
  CVector local(k);
  for (std::uint64_t c = 0; c < outer.count(); ++c) {
    const std::uint64_t base = outer[c];
    for (Eigen::Index i = 0; i < k; ++i) local(i) = amp(static_cast<Eigen::Index>(base | offs[i]));
    for (Eigen::Index j = 0; j < k; ++j) {
      const cplx cj = std::conj(local(j));
      if (cj == 0.0) continue;
      for (Eigen::Index i = 0; i < k; ++i) rho(i, j) += local(i) * cj;
    }
  }
  return rho;
}

std::vector<std::size_t> rank_sorted(const SiteSet& sites, std::vector<std::size_t> subset) {
  std::sort(subset.begin(), subset.end(), [&](std::size_t a, std::size_t b) { return sites.rank(a) < sites.rank(b); });
  return subset;
}

}  // namespace coarsemap::sim
