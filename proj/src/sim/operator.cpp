#include "coarsemap/sim/operator.hpp"

#include <algorithm>

#include "coarsemap/error.hpp"
#include "tensor.hpp"

namespace coarsemap::sim {

namespace {

std::vector<unsigned> positions_in(std::span<const std::size_t> sub, std::span<const std::size_t> support) {
  std::vector<unsigned> out;
  out.reserve(sub.size());
  for (std::size_t s : sub) {
    const auto it = std::find(support.begin(), support.end(), s);
    if (it == support.end()) throw Error(ErrorCode::SupportOutOfRange, "site not in operator support");
    out.push_back(static_cast<unsigned>(it - support.begin()));
  }
  return out;
}

}  // namespace

EvolvedOperator single_site(Pauli p, std::size_t site) { return {{site}, pauli_matrix(p)}; }

EvolvedOperator embed(const EvolvedOperator& op, std::span<const std::size_t> support) {
  const auto pos = positions_in(op.support, support);
  std::vector<unsigned> rest;
  for (unsigned q = 0; q < support.size(); ++q)
    if (std::find(pos.begin(), pos.end(), q) == pos.end()) rest.push_back(q);
  const auto in = detail::scatter_offsets(pos);
  const detail::BitEnumerator out(rest);
  const Eigen::Index dim = Eigen::Index{1} << support.size();
  CMatrix m = CMatrix::Zero(dim, dim);
  for (std::uint64_t c = 0; c < out.count(); ++c) {
    const std::uint64_t base = out[c];
    for (std::size_t j = 0; j < in.size(); ++j)
      for (std::size_t i = 0; i < in.size(); ++i)
        m(static_cast<Eigen::Index>(base | in[i]), static_cast<Eigen::Index>(base | in[j])) =
            op.matrix(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }
  return {std::vector<std::size_t>(support.begin(), support.end()), std::move(m)};
}

cplx expectation(const SpinState& psi, const EvolvedOperator& op) {
  for (std::size_t s : op.support)
    if (s >= psi.size()) throw Error(ErrorCode::SupportOutOfRange, "operator support outside the state");
  const CMatrix rho = reduced_density(psi, op.support);
  cplx acc = 0.0;
  for (Eigen::Index i = 0; i < rho.rows(); ++i)
    for (Eigen::Index j = 0; j < rho.cols(); ++j) acc += rho(i, j) * op.matrix(j, i);
  return acc;
}

CMatrix partial_trace(const EvolvedOperator& op, std::span<const std::size_t> keep) {
  const auto pos = positions_in(keep, op.support);
  std::vector<unsigned> traced;
  for (unsigned q = 0; q < op.support.size(); ++q)
    if (std::find(pos.begin(), pos.end(), q) == pos.end()) traced.push_back(q);
  const auto in = detail::scatter_offsets(pos);
  const detail::BitEnumerator out(traced);
  const Eigen::Index k = static_cast<Eigen::Index>(in.size());
  CMatrix r = CMatrix::Zero(k, k);
  for (std::uint64_t c = 0; c < out.count(); ++c) {
    const std::uint64_t base = out[c];
    for (Eigen::Index j = 0; j < k; ++j)
      for (Eigen::Index i = 0; i < k; ++i)
        r(i, j) += op.matrix(static_cast<Eigen::Index>(base | in[i]), static_cast<Eigen::Index>(base | in[j]));
  }
  return r;
}

EvolvedOperator conditional_expectation(const EvolvedOperator& op, std::span<const std::size_t> region) {
  std::vector<std::size_t> keep;
  for (std::size_t s : op.support)
    if (std::find(region.begin(), region.end(), s) != region.end()) keep.push_back(s);
  const std::size_t traced = op.support.size() - keep.size();
  if (traced == 0) return op;
  EvolvedOperator reduced{keep, partial_trace(op, keep) / static_cast<double>(std::uint64_t{1} << traced)};
  return embed(reduced, op.support);
}

}  // namespace coarsemap::sim
