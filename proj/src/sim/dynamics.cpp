#include "coarsemap/sim/dynamics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>

#include "coarsemap/error.hpp"
#include "tensor.hpp"

namespace coarsemap::sim {

namespace {

using Evolved = std::array<EvolvedOperator, 3>;

Evolved evolve_paulis(const Circuit& circ, std::size_t x) {
  return {heisenberg(circ, x, Pauli::X), heisenberg(circ, x, Pauli::Y), heisenberg(circ, x, Pauli::Z)};
}

std::optional<unsigned> position(const std::vector<std::size_t>& support, std::size_t y) {
  const auto it = std::find(support.begin(), support.end(), y);
  if (it == support.end()) return std::nullopt;
  return static_cast<unsigned>(it - support.begin());
}

CMatrix commutator_with_site(const CMatrix& a, const CMatrix& b, unsigned pos) {
  const unsigned p[] = {pos};
  CMatrix ab = a;
  detail::apply_right(ab, b, p);
  CMatrix ba = a;
  detail::apply_left(ba, b, p);
  return ab - ba;
}

double pauli_bound(const Evolved& ev, unsigned pos) {
  double best = 0.0;
  for (const auto& op : ev)
    for (Pauli b : kNontrivialPaulis) best = std::max(best, operator_norm(commutator_with_site(op.matrix, pauli_matrix(b), pos)));
  return best;
}

void check_pair(const Circuit& circ, std::size_t x, std::size_t y) {
  if (x >= circ.size() || y >= circ.size()) throw Error(ErrorCode::SupportOutOfRange, "site out of range");
  if (x == y) throw Error(ErrorCode::InvalidArgument, "commutator needs two distinct sites");
}

CMatrix combine(const Evolved& ev, const CMatrix& a) {
  CMatrix out = CMatrix::Zero(ev[0].matrix.rows(), ev[0].matrix.cols());
  for (std::size_t k = 0; k < 3; ++k) {
    const cplx c = (pauli_matrix(kNontrivialPaulis[k]) * a).trace() / 2.0;
    out += c * ev[k].matrix;
  }
  return out;
}

struct TopPair {
  double sigma;
  CVector u;
  CVector v;
};

TopPair top_singular(const CMatrix& m) {
  Eigen::BDCSVD<CMatrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  return {svd.singularValues()(0), svd.matrixU().col(0), svd.matrixV().col(0)};
}

CorrEstimate alternate(const Evolved& ev, unsigned pos, std::size_t y, CMatrix a, CMatrix b,
                       const OptimizerOptions& options) {
  CorrEstimate est;
  est.converged = false;
  const std::size_t ys[] = {y};
  double prev = -1.0;
  for (std::size_t it = 0; it < options.max_iter; ++it) {
    const TopPair top = top_singular(commutator_with_site(combine(ev, a), b, pos));
    est.value = std::max(est.value, top.sigma);
    if (top.sigma - prev <= options.tol) {
      est.converged = true;
      break;
    }
    prev = top.sigma;
    // a-step: <u|[alpha(a), b]|v> = tr(K_a a)
    CMatrix ka = CMatrix::Zero(2, 2);
    for (std::size_t k = 0; k < 3; ++k) {
      const cplx m = top.u.dot(commutator_with_site(ev[k].matrix, b, pos) * top.v);
      ka += 0.5 * m * pauli_matrix(kNontrivialPaulis[k]);
    }
    a = trace_norm_argmax(ka).a;
    // b-step: <u|[A, b]|v> = tr(b tr_rest(|v><u| A - A |v><u|))
    const CMatrix big_a = combine(ev, a);
    const CMatrix vu = top.v * top.u.adjoint();
    const EvolvedOperator t{ev[0].support, vu * big_a - big_a * vu};
    b = trace_norm_argmax(partial_trace(t, ys)).a;
  }
  return est;
}

}  // namespace

double commutator_pauli(const Circuit& circ, std::size_t x, std::size_t y) {
  check_pair(circ, x, y);
  const Evolved ev = evolve_paulis(circ, x);
  const auto pos = position(ev[0].support, y);
  return pos ? pauli_bound(ev, *pos) : 0.0;
}

CorrEstimate commutator_exact(const Circuit& circ, std::size_t x, std::size_t y, const OptimizerOptions& options) {
  check_pair(circ, x, y);
  const Evolved ev = evolve_paulis(circ, x);
  const auto pos = position(ev[0].support, y);
  CorrEstimate out;
  if (!pos) return out;
  // best Pauli pair as the first start
  double best = -1.0;
  Pauli pa = Pauli::X, pb = Pauli::X;
  for (std::size_t k = 0; k < 3; ++k)
    for (Pauli b : kNontrivialPaulis) {
      const double v = operator_norm(commutator_with_site(ev[k].matrix, pauli_matrix(b), *pos));
      if (v > best) {
        best = v;
        pa = kNontrivialPaulis[k];
        pb = b;
      }
    }
  out.lower = best;
  out.upper = 9.0 * best;
  const auto first = alternate(ev, *pos, y, pauli_matrix(pa), pauli_matrix(pb), options);
  out.value = first.value;
  out.converged = first.converged;
  const std::uint64_t tx = stable_hash(circ.sites().id(x));
  const std::uint64_t ty = stable_hash(circ.sites().id(y));
  for (std::size_t r = 0; r < options.restarts; ++r) {
    const std::uint64_t tags[] = {tx, ty, r};
    auto rng = derived_rng(options.seed, tags);
    const CMatrix a = haar_unitary(2, rng);
    const CMatrix b = haar_unitary(2, rng);
    const auto e = alternate(ev, *pos, y, a, b, options);
    ++out.restarts_used;
    if (e.value > out.value) {
      out.value = e.value;
      out.converged = e.converged;
    }
  }
  out.value = std::max(out.value, best);
  // rounding residue above a vanishing bracket
  if (out.value > out.upper && out.value - out.upper <= 1e-12) out.value = out.upper;
  return out;
}

MatrixResult commutator_matrix(const Circuit& circ, Mode mode, const OptimizerOptions& options) {
  const std::size_t n = circ.size();
  std::vector<double> raw(n * n, 0.0);
  MatrixResult out;
  for (std::size_t x = 0; x < n; ++x) {
    const Evolved ev = evolve_paulis(circ, x);
    for (std::size_t y = 0; y < n; ++y) {
      if (y == x) continue;
      const auto pos = position(ev[0].support, y);
      if (!pos) continue;
      if (mode == Mode::Pauli) {
        raw[x * n + y] = pauli_bound(ev, *pos);
      } else {
        const auto est = commutator_exact(circ, x, y, options);
        raw[x * n + y] = est.value;
        out.brackets.push_back({x, y, est});
      }
    }
  }
  out.matrix = build_decay_matrix(raw, circ.sites(), true);
  return out;
}

std::vector<double> spread_profile(const Circuit& circ, std::size_t x, const std::vector<Distance>& radii,
                                   const PathMetric& metric) {
  require_same_sites(metric.sites(), circ.sites());
  if (x >= circ.size()) throw Error(ErrorCode::SupportOutOfRange, "site out of range");
  const Evolved ev = evolve_paulis(circ, x);
  std::vector<double> out;
  out.reserve(radii.size());
  for (Distance r : radii) {
    const auto ball = metric.ball(x, r);
    const bool covered = std::all_of(ev[0].support.begin(), ev[0].support.end(), [&](std::size_t s) {
      return std::find(ball.begin(), ball.end(), s) != ball.end();
    });
    double best = 0.0;
    if (!covered) {
      for (const auto& op : ev) best = std::max(best, operator_norm(op.matrix - conditional_expectation(op, ball).matrix));
    }
    out.push_back(best);
  }
  return out;
}

std::vector<std::size_t> light_cone(const Circuit& circ, std::size_t x) {
  return heisenberg(circ, x, Pauli::X).support;
}

}  // namespace coarsemap::sim
