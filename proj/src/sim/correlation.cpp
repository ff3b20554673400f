#include "coarsemap/sim/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "coarsemap/error.hpp"
#include "coarsemap/sim/pauli.hpp"

namespace coarsemap::sim {

namespace {

void check_subsets(std::size_t n, std::span<const std::size_t> f, std::span<const std::size_t> g, std::size_t cap) {
  if (f.empty() || g.empty()) throw Error(ErrorCode::InvalidArgument, "subsets must be nonempty");
  if (f.size() > cap || g.size() > cap) throw Error(ErrorCode::SubsetTooLarge, "subset exceeds the size cap");
  for (std::size_t a : f) {
    if (a >= n) throw Error(ErrorCode::SupportOutOfRange, "site out of range");
    for (std::size_t b : g) {
      if (b >= n) throw Error(ErrorCode::SupportOutOfRange, "site out of range");
      if (a == b) throw Error(ErrorCode::OverlappingSupports, "subsets overlap");
    }
  }
}

/// Density matrix on F u G with F on the low bits; index = i + dF k.
struct JointDensity {
  CMatrix rho;
  Eigen::Index df;
  Eigen::Index dg;
  CMatrix rho_f;
  CMatrix rho_g;

  JointDensity(CMatrix r, unsigned f_bits, unsigned g_bits)
      : rho(std::move(r)), df(Eigen::Index{1} << f_bits), dg(Eigen::Index{1} << g_bits) {
    rho_f = CMatrix::Zero(df, df);
    rho_g = CMatrix::Zero(dg, dg);
    for (Eigen::Index k = 0; k < dg; ++k)
      for (Eigen::Index j = 0; j < df; ++j)
        for (Eigen::Index i = 0; i < df; ++i) rho_f(i, j) += rho(i + df * k, j + df * k);
    for (Eigen::Index i = 0; i < df; ++i)
      for (Eigen::Index l = 0; l < dg; ++l)
        for (Eigen::Index k = 0; k < dg; ++k) rho_g(k, l) += rho(i + df * k, i + df * l);
  }

  static cplx trace_product(const CMatrix& r, const CMatrix& m) {
    cplx acc = 0.0;
    for (Eigen::Index i = 0; i < r.rows(); ++i)
      for (Eigen::Index j = 0; j < r.cols(); ++j) acc += r(i, j) * m(j, i);
    return acc;
  }

  /// K_b with tr(K_b a) = phi(a b) - phi(a) phi(b).
  CMatrix k_of_b(const CMatrix& b) const {
    const cplx phib = trace_product(rho_g, b);
    CMatrix k = -phib * rho_f;
    for (Eigen::Index l = 0; l < dg; ++l)
      for (Eigen::Index kk = 0; kk < dg; ++kk) {
        const cplx bkl = b(kk, l);
        if (bkl == 0.0) continue;
        for (Eigen::Index i = 0; i < df; ++i)
          for (Eigen::Index j = 0; j < df; ++j) k(j, i) += rho(j + df * l, i + df * kk) * bkl;
      }
    return k;
  }

  /// L_a with tr(L_a b) = phi(a b) - phi(a) phi(b).
  CMatrix l_of_a(const CMatrix& a) const {
    const cplx phia = trace_product(rho_f, a);
    CMatrix out = -phia * rho_g;
    for (Eigen::Index j = 0; j < df; ++j)
      for (Eigen::Index i = 0; i < df; ++i) {
        const cplx aij = a(i, j);
        if (aij == 0.0) continue;
        for (Eigen::Index kk = 0; kk < dg; ++kk)
          for (Eigen::Index l = 0; l < dg; ++l) out(l, kk) += rho(j + df * l, i + df * kk) * aij;
      }
    return out;
  }
};

struct PauliBest {
  double value = 0.0;
  PauliWord p{};
  PauliWord q{};
};

PauliBest best_pauli_pair(const CMatrix& rho, unsigned f_bits, unsigned g_bits) {
  const std::uint32_t nf = 1u << (2 * f_bits);
  const std::uint32_t ng = 1u << (2 * g_bits);
  auto word = [](std::uint32_t code, unsigned bits) {
    // two bits per qubit: low = x, high = z
    PauliWord w;
    for (unsigned q = 0; q < bits; ++q) {
      w.x |= ((code >> (2 * q)) & 1u) << q;
      w.z |= ((code >> (2 * q + 1)) & 1u) << q;
    }
    return w;
  };
  std::vector<cplx> ev_g(ng);
  for (std::uint32_t c = 1; c < ng; ++c) {
    const PauliWord q = word(c, g_bits);
    ev_g[c] = pauli_expectation(rho, {q.x << f_bits, q.z << f_bits});
  }
  PauliBest best;
  for (std::uint32_t a = 1; a < nf; ++a) {
    const PauliWord p = word(a, f_bits);
    const cplx ep = pauli_expectation(rho, p);
    for (std::uint32_t c = 1; c < ng; ++c) {
      const PauliWord q = word(c, g_bits);
      const PauliWord pq{p.x | (q.x << f_bits), p.z | (q.z << f_bits)};
      const double v = std::abs(pauli_expectation(rho, pq) - ep * ev_g[c]);
      if (v > best.value) best = {v, p, q};
    }
  }
  return best;
}

std::vector<std::size_t> joint(std::span<const std::size_t> f, std::span<const std::size_t> g) {
  std::vector<std::size_t> out(f.begin(), f.end());
  out.insert(out.end(), g.begin(), g.end());
  return out;
}

std::uint64_t label_tag(const SiteSet& sites, std::span<const std::size_t> subset) {
  std::string key;
  for (std::size_t s : subset) key += sites.id(s) + '\x1f';
  return stable_hash(key);
}

CorrEstimate alternate(const JointDensity& jd, const CMatrix& b_start, const OptimizerOptions& options) {
  CorrEstimate est;
  est.converged = false;
  CMatrix b = b_start;
  double prev = -1.0;
  for (std::size_t it = 0; it < options.max_iter; ++it) {
    const auto a_step = trace_norm_argmax(jd.k_of_b(b));
    const auto b_step = trace_norm_argmax(jd.l_of_a(a_step.a));
    b = b_step.a;
    est.value = std::max(est.value, b_step.value);
    if (b_step.value - prev <= options.tol) {
      est.converged = true;
      break;
    }
    prev = b_step.value;
  }
  return est;
}

}  // namespace

CMatrix reduced_covariance_operator(const SpinState& psi, std::span<const std::size_t> x_set, const EvolvedOperator& b) {
  check_subsets(psi.size(), x_set, b.support, std::max(x_set.size(), b.support.size()));
  const JointDensity jd(reduced_density(psi, joint(x_set, b.support)), static_cast<unsigned>(x_set.size()),
                        static_cast<unsigned>(b.support.size()));
  return jd.k_of_b(b.matrix);
}

double corr_pauli(const SpinState& psi, std::span<const std::size_t> f, std::span<const std::size_t> g,
                  std::size_t subset_cap) {
  check_subsets(psi.size(), f, g, subset_cap);
  const CMatrix rho = reduced_density(psi, joint(f, g));
  return best_pauli_pair(rho, static_cast<unsigned>(f.size()), static_cast<unsigned>(g.size())).value;
}

CorrEstimate corr_exact(const SpinState& psi, std::span<const std::size_t> f, std::span<const std::size_t> g,
                        const OptimizerOptions& options) {
  check_subsets(psi.size(), f, g, options.subset_cap);
  const auto fb = static_cast<unsigned>(f.size());
  const auto gb = static_cast<unsigned>(g.size());
  const JointDensity jd(reduced_density(psi, joint(f, g)), fb, gb);
  const PauliBest pauli = best_pauli_pair(jd.rho, fb, gb);

  CorrEstimate out;
  out.lower = pauli.value;
  out.upper = static_cast<double>(((std::uint64_t{1} << (2 * fb)) - 1) * ((std::uint64_t{1} << (2 * gb)) - 1)) * pauli.value;
  out.converged = true;

  const CMatrix q0 = pauli_word_matrix(pauli.q, gb);
  auto first = alternate(jd, q0, options);
  out.value = first.value;
  out.converged = first.converged;
  out.restarts_used = 0;
  const std::uint64_t tf = label_tag(psi.sites(), f);
  const std::uint64_t tg = label_tag(psi.sites(), g);
  for (std::size_t r = 0; r < options.restarts; ++r) {
    const std::uint64_t tags[] = {tf, tg, r};
    auto rng = derived_rng(options.seed, tags);
    const auto e = alternate(jd, haar_unitary(jd.dg, rng), options);
    ++out.restarts_used;
    if (e.value > out.value) {
      out.value = e.value;
      out.converged = e.converged;
    }
  }
  out.value = std::max(out.value, pauli.value);
  // rounding residue above a vanishing bracket
  if (out.value > out.upper && out.value - out.upper <= 1e-12) out.value = out.upper;
  return out;
}

MatrixResult corr_matrix(const SpinState& psi, const CorrMatrixOptions& options) {
  const SiteSet& sites = psi.sites();
  const std::size_t n = sites.size();
  if (options.radius < 0) throw Error(ErrorCode::InvalidArgument, "radius must be nonnegative");
  std::vector<std::vector<std::size_t>> regions(n);
  if (options.radius == 0) {
    for (std::size_t x = 0; x < n; ++x) regions[x] = {x};
  } else {
    const PathMetric metric = options.metric ? *options.metric : path_metric(lattice_graph(sites));
    require_same_sites(metric.sites(), sites);
    for (std::size_t x = 0; x < n; ++x) regions[x] = rank_sorted(sites, metric.ball(x, options.radius));
  }

  std::vector<double> raw(n * n, 0.0);
  std::vector<std::pair<std::size_t, std::size_t>> overlapping;
  MatrixResult out;
  double largest = 0.0;
  const auto& order = sites.canonical_order();
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p + 1; q < n; ++q) {
      const std::size_t x = order[p], y = order[q];
      const auto& f = regions[x];
      const auto& g = regions[y];
      const bool overlap = std::any_of(f.begin(), f.end(), [&](std::size_t s) {
        return std::find(g.begin(), g.end(), s) != g.end();
      });
      if (overlap) {
        overlapping.emplace_back(x, y);
        continue;
      }
      double v = 0.0;
      if (options.mode == Mode::Pauli) {
        v = corr_pauli(psi, f, g, options.optimizer.subset_cap);
      } else {
        const auto est = corr_exact(psi, f, g, options.optimizer);
        v = est.value;
        out.brackets.push_back({x, y, est});
      }
      raw[x * n + y] = raw[y * n + x] = v;
      largest = std::max(largest, v);
    }
  }
  for (auto [x, y] : overlapping) raw[x * n + y] = raw[y * n + x] = largest;
  out.matrix = build_decay_matrix(raw, sites, false);
  return out;
}

}  // namespace coarsemap::sim
