#include "coarsemap/sim/perturb.hpp"

#include "coarsemap/error.hpp"

namespace coarsemap::sim {

namespace {

Gate region_gate(std::size_t n, const std::vector<std::size_t>& region, const CMatrix& u) {
  if (region.empty()) throw Error(ErrorCode::InvalidArgument, "region is empty");
  for (std::size_t s : region)
    if (s >= n) throw Error(ErrorCode::SupportOutOfRange, "region site out of range");
  const Eigen::Index dim = Eigen::Index{1} << region.size();
  if (u.rows() != dim || u.cols() != dim) throw Error(ErrorCode::DimensionMismatch, "unitary dimension is not 2^|region|");
  return make_gate(region, u);
}

}  // namespace

SpinState apply_localized_perturbation(const SpinState& target, const std::vector<std::size_t>& region, const CMatrix& u) {
  Circuit c(target.sites());
  c.append_layer({region_gate(target.size(), region, u)});
  return circuit_state(target, c);
}

Circuit apply_localized_perturbation(const Circuit& target, const std::vector<std::size_t>& region, const CMatrix& u) {
  Circuit out = target;
  out.append_layer({region_gate(target.size(), region, u)});
  return out;
}

}  // namespace coarsemap::sim
